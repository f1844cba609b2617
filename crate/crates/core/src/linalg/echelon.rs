use num_traits::Zero;

use super::rational::Rational;
use super::vector::Vector;

/// Incrementally built echelon basis supporting push/pop, used for
/// independence tests inside searches.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn reduce(&self, v: &Vector) -> Vec<Rational> {
        assert_eq!(v.dim(), self.dim);
        let mut x = v.entries().to_vec();
        for (p, row) in &self.rows {
            if x[*p].is_zero() {
                continue;
            }
            let f = x[*p].clone();
            for (a, b) in x.iter_mut().zip(row).skip(*p) {
                *a -= &f * b;
            }
        }
        x
    }

    pub fn is_independent_of(&self, v: &Vector) -> bool {
        self.reduce(v).iter().any(|x| !x.is_zero())
    }

    /// Adds `v` if it is independent of the current rows; reports whether it was added.
    pub fn try_push(&mut self, v: &Vector) -> bool {
        let mut x = self.reduce(v);
        let Some(p) = x.iter().position(|a| !a.is_zero()) else {
            return false;
        };
        let inv = x[p].recip();
        for a in x.iter_mut().skip(p) {
            *a *= &inv;
        }
        self.rows.push((p, x));
        true
    }

    pub fn pop(&mut self) {
        self.rows.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn push_pop() {
        let mut e = Echelon::new(3);
        assert!(e.try_push(&Vector::from_ints(&[0, 1, 1])));
        assert!(e.try_push(&Vector::from_ints(&[1, 1, 0])));
        assert!(!e.try_push(&Vector::from_ints(&[2, 3, 1])));
        assert!(e.try_push(&Vector::from_ints(&[0, 0, 5])));
        assert_eq!(e.rank(), 3);
        e.pop();
        assert!(!e.is_independent_of(&Vector::from_ints(&[1, 2, 1])));
        assert!(e.is_independent_of(&Vector::from_ints(&[0, 0, 1])));
    }
}
