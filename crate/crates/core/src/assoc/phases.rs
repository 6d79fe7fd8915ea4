use super::{hash_index, inverse_hash, NoProbe, PassStats, Probe};
use crate::word::{swap_payloads_at, TaggedWord, MAX_PAYLOAD};

/// Practices every value of `[delta, delta + n)` into nodes over `buf`.
///
/// On return the slot `j` is a node iff `delta + j` occurred, and its record
/// is the number of further occurrences. Untagged slots hold the idle
/// occurrences and the out-of-interval values in no particular order.
///
/// Requires an untagged buffer whose minimum is `delta`.
pub fn practice(buf: &mut [TaggedWord], delta: u64) -> PassStats {
    practice_with(buf, delta, &mut NoProbe)
}

pub(crate) fn practice_with<P: Probe>(buf: &mut [TaggedWord], delta: u64, probe: &mut P) -> PassStats {
    let n = buf.len();
    let mut stats = PassStats::new(n, delta);
    let mut next_min = MAX_PAYLOAD;
    let mut i = 0;
    while i < n {
        let word = buf[i];
        if word.is_tagged() {
            i += 1;
            continue;
        }
        let Some(j) = hash_index(word.bits(), delta, n) else {
            stats.n_d_prime += 1;
            next_min = next_min.min(word.bits());
            i += 1;
            continue;
        };
        let slot = buf[j];
        if !slot.is_tagged() {
            // First occurrence: the slot's occupant moves to i, slot becomes a node.
            // When j > i the moved word is still unvisited, so i stays.
            buf[i] = slot;
            buf[j] = TaggedWord::node(0);
            probe.on_writes(2);
            if j <= i {
                i += 1;
            }
            stats.n_d += 1;
        } else {
            buf[j] = TaggedWord::node(slot.payload() + 1);
            probe.on_writes(1);
            stats.n_c += 1;
            i += 1;
        }
    }
    if stats.n_d_prime > 0 {
        stats.delta_prime = Some(next_min);
    }
    stats
}

/// Moves the records of the first `n_d` nodes, in left-to-right order, into
/// the payloads of `buf[..n_d]`. Only payloads move; tag bits stay fixed.
pub fn store_records(buf: &mut [TaggedWord], n_d: usize) {
    store_records_with(buf, n_d, &mut NoProbe)
}

pub(crate) fn store_records_with<P: Probe>(buf: &mut [TaggedWord], n_d: usize, probe: &mut P) {
    let mut next = 0;
    for i in 0..buf.len() {
        if next == n_d {
            break;
        }
        if buf[i].is_tagged() {
            if i != next {
                swap_payloads_at(buf, i, next);
                probe.on_writes(2);
            }
            next += 1;
        }
    }
}

/// Gathers the `n_c` idle occurrences at `buf[n_d..n_d + n_c]`, leaving the
/// out-of-interval values behind them. Payload-only swaps.
pub fn partition_idle(buf: &mut [TaggedWord], stats: &PassStats) {
    partition_idle_with(buf, stats, &mut NoProbe)
}

pub(crate) fn partition_idle_with<P: Probe>(buf: &mut [TaggedWord], stats: &PassStats, probe: &mut P) {
    let n = buf.len();
    let mut remaining = stats.n_c;
    let mut dst = stats.n_d;
    let mut i = stats.n_d;
    while remaining > 0 && i < n {
        if hash_index(buf[i].payload(), stats.delta, n).is_some() {
            if i != dst {
                swap_payloads_at(buf, i, dst);
                probe.on_writes(2);
            }
            dst += 1;
            remaining -= 1;
        }
        i += 1;
    }
}

/// Expands the stored records into the sorted run `buf[..n_d + n_c]` and
/// clears every tag.
///
/// Nodes are found scanning right to left; the t-th node from the right is
/// paired with the record at `n_d - t`. Each value is written `record + 1`
/// times, filling the run from its end. A record is read before any copy is
/// written since the last copy may land on the record's own slot.
pub fn retrieve(buf: &mut [TaggedWord], stats: &PassStats) {
    retrieve_with(buf, stats, &mut NoProbe)
}

pub(crate) fn retrieve_with<P: Probe>(buf: &mut [TaggedWord], stats: &PassStats, probe: &mut P) {
    let mut i = buf.len();
    let mut end = stats.n_d + stats.n_c;
    for record_at in (0..stats.n_d).rev() {
        loop {
            i -= 1;
            if buf[i].is_tagged() {
                break;
            }
        }
        let value = inverse_hash(i, stats.delta);
        let copies = (buf[record_at].payload() as usize).saturating_add(1).min(end);
        for slot in &mut buf[end - copies..end] {
            *slot = slot.with_payload(value);
        }
        end -= copies;
        buf[i] = buf[i].untagged();
        probe.on_writes(copies as u64 + 1);
    }
}

/// One full pass: sorts every value of `[delta, delta + n)` to the front of
/// `buf` and leaves the remaining values behind them.
pub fn sort_pass(buf: &mut [TaggedWord], delta: u64) -> PassStats {
    run_pass(buf, 0, delta, &mut NoProbe)
}

pub(crate) fn run_pass<P: Probe>(buf: &mut [TaggedWord], start: usize, delta: u64, probe: &mut P) -> PassStats {
    let mut stats = practice_with(buf, delta, probe);
    stats.start = start;
    probe.after_practice(buf, &stats);
    store_records_with(buf, stats.n_d, probe);
    probe.after_store(buf, &stats);
    partition_idle_with(buf, &stats, probe);
    retrieve_with(buf, &stats, probe);
    probe.after_pass(buf, &stats);
    stats
}
