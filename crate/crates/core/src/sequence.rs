use std::path::Path;

use crate::error::{Error, Result};

/// An input string together with its rank-compressed alphabet.
///
/// Codes run over `1..=alphabet_size()` in byte order, leaving 0 free as a sentinel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequence {
    bytes: Vec<u8>,
    symbols: Vec<u8>,
    codes: [u16; 256],
}

impl Sequence {
    pub fn new(bytes: Vec<u8>) -> Self {
        let mut present = [false; 256];
        for &c in &bytes {
            present[c as usize] = true;
        }
        let symbols: Vec<u8> = (0..=255u8).filter(|&c| present[c as usize]).collect();
        let mut codes = [0u16; 256];
        for (rank, &c) in symbols.iter().enumerate() {
            codes[c as usize] = rank as u16 + 1;
        }
        Self { bytes, symbols, codes }
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.bytes
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    /// Number of distinct bytes.
    pub fn alphabet_size(&self) -> usize {
        self.symbols.len()
    }

    /// Distinct bytes in increasing order; `symbols()[c - 1]` is the byte with code `c`.
    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    /// Code of `byte`, or `None` if it does not occur.
    pub fn code(&self, byte: u8) -> Option<u16> {
        match self.codes[byte as usize] {
            0 => None,
            c => Some(c),
        }
    }

    /// Byte carrying `code`.
    pub fn symbol(&self, code: u16) -> Option<u8> {
        self.symbols.get((code as usize).checked_sub(1)?).copied()
    }

    pub fn codes(&self) -> Vec<u16> {
        self.bytes.iter().map(|&c| self.codes[c as usize]).collect()
    }
}

impl From<Vec<u8>> for Sequence {
    fn from(bytes: Vec<u8>) -> Self {
        Self::new(bytes)
    }
}

impl From<&[u8]> for Sequence {
    fn from(bytes: &[u8]) -> Self {
        Self::new(bytes.to_vec())
    }
}

/// Reads a file verbatim. With `max_alphabet`, files using more distinct bytes are rejected.
pub fn load_sequence(path: impl AsRef<Path>, max_alphabet: Option<usize>) -> Result<Sequence> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    let seq = Sequence::new(bytes);
    match max_alphabet {
        Some(limit) if seq.alphabet_size() > limit => Err(Error::AlphabetTooLarge(seq.alphabet_size())),
        _ => Ok(seq),
    }
}
