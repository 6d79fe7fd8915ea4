//! Integer file formats and the `sort` command.
//!
//! * text: one decimal integer per LF-terminated line.
//! * binary: little-endian words of `word_bytes` bytes each.
//!
//! With `signed`, values are two's complement. They are biased by `2^63`
//! before sorting so the unsigned order matches the signed one, and the
//! bias is removed afterwards.

use std::fs;
use std::path::Path;

use assoc_sort::word::{MAX_PAYLOAD, TAG_BIT};
use assoc_sort::{assoc_sort, sort_full_universe};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Binary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SortOptions {
    pub format: Format,
    pub word_bytes: usize,
    pub full_universe: bool,
    pub signed: bool,
}

impl Default for SortOptions {
    fn default() -> Self {
        SortOptions { format: Format::Text, word_bytes: 8, full_universe: false, signed: false }
    }
}

impl SortOptions {
    fn validate(&self) -> Result<(), CliError> {
        if !(1..=8).contains(&self.word_bytes) {
            return Err(CliError::Usage(format!("--word-bytes must be between 1 and 8, got {}", self.word_bytes)));
        }
        Ok(())
    }
}

/// Parses `bytes` into sort keys; signed values come back biased.
pub fn read_values(bytes: &[u8], opts: &SortOptions) -> Result<Vec<u64>, CliError> {
    opts.validate()?;
    match opts.format {
        Format::Text => read_text(bytes, opts.signed),
        Format::Binary => read_binary(bytes, opts.word_bytes, opts.signed),
    }
}

fn read_text(bytes: &[u8], signed: bool) -> Result<Vec<u64>, CliError> {
    let text = std::str::from_utf8(bytes).map_err(|e| CliError::Format(format!("input is not UTF-8: {e}")))?;
    text.lines()
        .enumerate()
        .map(|(i, line)| {
            let token = line.trim();
            let parsed =
                if signed { token.parse::<i64>().map(bias) } else { token.parse::<u64>() };
            parsed.map_err(|_| CliError::Parse { line: i + 1, token: token.to_owned() })
        })
        .collect()
}

fn read_binary(bytes: &[u8], word_bytes: usize, signed: bool) -> Result<Vec<u64>, CliError> {
    if !bytes.len().is_multiple_of(word_bytes) {
        return Err(CliError::Format(format!(
            "binary input of {} bytes is not a multiple of the {word_bytes}-byte word",
            bytes.len()
        )));
    }
    let shift = 64 - 8 * word_bytes as u32;
    Ok(bytes
        .chunks_exact(word_bytes)
        .map(|chunk| {
            let mut word = [0u8; 8];
            word[..word_bytes].copy_from_slice(chunk);
            let raw = u64::from_le_bytes(word);
            if signed {
                bias(((raw << shift) as i64) >> shift)
            } else {
                raw
            }
        })
        .collect())
}

/// Serializes sort keys, undoing the signed bias.
pub fn write_values(values: &[u64], opts: &SortOptions) -> Vec<u8> {
    let mut out = Vec::with_capacity(values.len() * 8);
    match opts.format {
        Format::Text => {
            for &v in values {
                let line = if opts.signed { format!("{}\n", unbias(v)) } else { format!("{v}\n") };
                out.extend_from_slice(line.as_bytes());
            }
        }
        Format::Binary => {
            for &v in values {
                let raw = if opts.signed { unbias(v) as u64 } else { v };
                out.extend_from_slice(&raw.to_le_bytes()[..opts.word_bytes]);
            }
        }
    }
    out
}

fn bias(v: i64) -> u64 {
    (v as u64) ^ TAG_BIT
}

fn unbias(v: u64) -> i64 {
    (v ^ TAG_BIT) as i64
}

/// Sorts keys in place according to the options.
pub fn sort_values(values: &mut [u64], opts: &SortOptions) -> Result<(), CliError> {
    if opts.full_universe || opts.signed {
        sort_full_universe(values)?;
        return Ok(());
    }
    if let Some(index) = values.iter().position(|&v| v > MAX_PAYLOAD) {
        let location = match opts.format {
            Format::Text => format!("line {}", index + 1),
            Format::Binary => format!("word {index}"),
        };
        return Err(CliError::Bound { location, value: values[index], bound: MAX_PAYLOAD });
    }
    assoc_sort(values)?;
    Ok(())
}

/// The `sort` command: reads `input`, sorts, writes `output` in the same format.
pub fn cmd_sort(input: &Path, output: &Path, opts: &SortOptions) -> Result<(), CliError> {
    let bytes = fs::read(input).map_err(|e| CliError::io(input, e))?;
    let mut values = read_values(&bytes, opts)?;
    sort_values(&mut values, opts)?;
    fs::write(output, write_values(&values, opts)).map_err(|e| CliError::io(output, e))
}
