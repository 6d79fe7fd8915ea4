//! Tagged machine words.
//!
//! A word holds either a plain integer (tag bit clear) or a *node* (tag bit
//! set). The tag is the most significant bit; the remaining `WORD_BITS - 1`
//! bits are the payload. For a plain integer the payload is the integer
//! itself; for a node it is the node's record, the number of idle
//! occurrences counted at that position.

use std::fmt;

/// Width of a word in bits.
pub const WORD_BITS: u32 = u64::BITS;

/// The tag bit, `2^(w-1)`.
pub const TAG_BIT: u64 = 1 << (WORD_BITS - 1);

/// Mask selecting the low `w-1` payload bits.
pub const PAYLOAD_MASK: u64 = TAG_BIT - 1;

/// Largest integer a word can carry untagged, `2^(w-1) - 1`.
pub const MAX_PAYLOAD: u64 = PAYLOAD_MASK;

/// Longest list the associative sort accepts, `2^(w-1)`. Records count
/// occurrences in `w-1` bits, so longer lists could overflow a record.
pub const MAX_LEN: u64 = TAG_BIT;

/// A `w`-bit word whose most significant bit marks it as a node.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
#[repr(transparent)]
pub struct TaggedWord(u64);

impl TaggedWord {
    #[inline(always)]
    pub const fn from_bits(bits: u64) -> Self {
        TaggedWord(bits)
    }

    #[inline(always)]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// A node whose record is `count`. `count` must fit in the payload.
    #[inline(always)]
    pub const fn node(count: u64) -> Self {
        debug_assert!(count <= MAX_PAYLOAD);
        TaggedWord(TAG_BIT | count)
    }

    #[inline(always)]
    pub const fn is_tagged(self) -> bool {
        self.0 & TAG_BIT != 0
    }

    /// Low `w-1` bits, tag ignored.
    #[inline(always)]
    pub const fn payload(self) -> u64 {
        self.0 & PAYLOAD_MASK
    }

    /// Replaces the payload, keeping the tag bit where it was.
    #[inline(always)]
    pub const fn with_payload(self, value: u64) -> Self {
        debug_assert!(value <= MAX_PAYLOAD);
        TaggedWord((self.0 & TAG_BIT) | (value & PAYLOAD_MASK))
    }

    #[inline(always)]
    pub const fn untagged(self) -> Self {
        TaggedWord(self.0 & PAYLOAD_MASK)
    }

    /// Exchanges the payloads of two words; each tag bit stays put.
    #[inline(always)]
    pub const fn swap_payloads(a: Self, b: Self) -> (Self, Self) {
        let diff = (a.0 ^ b.0) & PAYLOAD_MASK;
        (TaggedWord(a.0 ^ diff), TaggedWord(b.0 ^ diff))
    }

    /// Reinterprets a slice of raw words as tagged words.
    pub fn cast_slice(words: &[u64]) -> &[TaggedWord] {
        // SAFETY: TaggedWord is repr(transparent) over u64, so layout,
        // alignment and validity are identical.
        unsafe { &*(words as *const [u64] as *const [TaggedWord]) }
    }

    /// Reinterprets a mutable slice of raw words as tagged words.
    pub fn cast_slice_mut(words: &mut [u64]) -> &mut [TaggedWord] {
        // SAFETY: see `cast_slice`.
        unsafe { &mut *(words as *mut [u64] as *mut [TaggedWord]) }
    }
}

/// Swaps the payloads of `buf[a]` and `buf[b]` in place.
#[inline(always)]
pub(crate) fn swap_payloads_at(buf: &mut [TaggedWord], a: usize, b: usize) {
    let (x, y) = TaggedWord::swap_payloads(buf[a], buf[b]);
    buf[a] = x;
    buf[b] = y;
}

impl fmt::Debug for TaggedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_tagged() {
            write!(f, "node({})", self.payload())
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl From<u64> for TaggedWord {
    fn from(bits: u64) -> Self {
        TaggedWord(bits)
    }
}

impl From<TaggedWord> for u64 {
    fn from(word: TaggedWord) -> Self {
        word.0
    }
}
