use std::fmt;

/// An immutable byte string addressed by 1-based positions, as every public
/// interface of this crate is. Internally bytes live in an ordinary 0-based
/// `Vec<u8>`; `at` is the boundary adapter.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Text {
    bytes: Vec<u8>,
}

impl Text {
    pub fn new(bytes: Vec<u8>) -> Self {
        Text { bytes }
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    /// Byte at 1-based position `pos`.
    ///
    /// Panics when `pos` is out of 1..=len.
    pub fn at(&self, pos: usize) -> u8 {
        assert!(
            pos >= 1 && pos <= self.bytes.len(),
            "position {pos} out of range 1..={}",
            self.bytes.len()
        );
        self.bytes[pos - 1]
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn reversed(&self) -> Text {
        let mut bytes = self.bytes.clone();
        bytes.reverse();
        Text { bytes }
    }
}

impl From<&[u8]> for Text {
    fn from(bytes: &[u8]) -> Self {
        Text {
            bytes: bytes.to_vec(),
        }
    }
}

impl From<Vec<u8>> for Text {
    fn from(bytes: Vec<u8>) -> Self {
        Text { bytes }
    }
}

impl From<&str> for Text {
    fn from(s: &str) -> Self {
        Text {
            bytes: s.as_bytes().to_vec(),
        }
    }
}

impl fmt::Debug for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Text({:?})", String::from_utf8_lossy(&self.bytes))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_based_access() {
        let t = Text::from("abc");
        assert_eq!(t.at(1), b'a');
        assert_eq!(t.at(3), b'c');
        assert_eq!(t.len(), 3);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn zero_position_panics() {
        Text::from("abc").at(0);
    }

    #[test]
    fn reversal() {
        assert_eq!(Text::from("abc").reversed(), Text::from("cba"));
        assert_eq!(Text::from("").reversed(), Text::from(""));
    }
}
