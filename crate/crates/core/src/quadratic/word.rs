use std::fmt;

/// A monomial in the free algebra: a sequence of generator indices.
///
/// Words of a fixed length `n` over `d` letters are ranked lexicographically,
/// `rank = Σ letters[i]·d^(n-1-i)`, which is the coordinate index in `E^⊗n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn rank(&self, d: usize) -> usize {
        word_rank(&self.0, d)
    }

    pub fn unrank(rank: usize, d: usize, n: usize) -> Word {
        Word(word_unrank(rank, d, n))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn pushed(&self, letter: usize) -> Word {
        let mut letters = self.0.clone();
        letters.push(letter);
        Word(letters)
    }

    /// `x0*x1*...` using the given generator names, `1` for the empty word.
    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&i| names[i].as_str())
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub fn word_rank(letters: &[usize], d: usize) -> usize {
    letters.iter().fold(0, |acc, &l| acc * d + l)
}

pub fn word_unrank(mut rank: usize, d: usize, n: usize) -> Vec<usize> {
    let mut letters = vec![0; n];
    for slot in letters.iter_mut().rev() {
        *slot = rank % d;
        rank /= d;
    }
    letters
}

/// `d^n`, panicking on overflow (these sizes are far beyond anything tractable).
pub fn tensor_dim(d: usize, n: usize) -> usize {
    d.checked_pow(n as u32)
        .expect("tensor power dimension overflows usize")
}
