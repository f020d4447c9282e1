use crate::exec::Execution;
use crate::poly::{Poly, Vars};

/// Dense multi-index array of polynomials over a `dim`-dimensional basis.
///
/// Index order follows the argument order of the tensor, with the
/// contravariant (output) slot last: a connection is stored as
/// `gamma[i][j][k]`, the coefficient of `X_k` in `nabla_{X_i} X_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor {
    dim: usize,
    valence: (usize, usize),
    data: Vec<Poly>,
}

impl Tensor {
    /// Builds every entry from its index tuple.
    pub fn from_fn<F>(dim: usize, valence: (usize, usize), exec: Execution, f: F) -> Self
    where
        F: Fn(&[usize]) -> Poly + Sync + Send,
    {
        let rank = valence.0 + valence.1;
        let len = dim.pow(rank as u32);
        let data = exec.map_range(len, |flat| f(&unflatten(flat, dim, rank)));
        Tensor { dim, valence, data }
    }

    pub fn zeros(vars: &Vars, dim: usize, valence: (usize, usize)) -> Self {
        let len = dim.pow((valence.0 + valence.1) as u32);
        Tensor {
            dim,
            valence,
            data: vec![Poly::zero(vars); len],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `(contravariant, covariant)` slot counts.
    pub fn valence(&self) -> (usize, usize) {
        self.valence
    }

    pub fn rank(&self) -> usize {
        self.valence.0 + self.valence.1
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    fn flat(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.rank(), "index arity does not match valence");
        idx.iter().fold(0, |acc, &i| {
            assert!(i < self.dim, "index out of range");
            acc * self.dim + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &Poly {
        &self.data[self.flat(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: Poly) {
        let f = self.flat(idx);
        self.data[f] = value;
    }

    pub fn entries(&self) -> &[Poly] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Poly::is_zero)
    }

    /// Nonzero entries with their index tuples, in lexicographic index order.
    pub fn nonzero(&self) -> impl Iterator<Item = (Vec<usize>, &Poly)> {
        let (dim, rank) = (self.dim, self.rank());
        self.data
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(move |(k, p)| (unflatten(k, dim, rank), p))
    }

    /// Applies `f` to every entry, keeping shape.
    pub fn map<F>(&self, exec: Execution, f: F) -> Tensor
    where
        F: Fn(&Poly) -> Poly + Sync + Send,
    {
        Tensor {
            dim: self.dim,
            valence: self.valence,
            data: exec.map_range(self.data.len(), |k| f(&self.data[k])),
        }
    }

    /// Entrywise difference; shapes must agree.
    pub fn sub(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dim, other.dim);
        assert_eq!(self.rank(), other.rank());
        Tensor {
            dim: self.dim,
            valence: self.valence,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Index tuple for a row-major flat position.
pub fn unflatten(mut flat: usize, dim: usize, rank: usize) -> Vec<usize> {
    let mut idx = vec![0; rank];
    for slot in (0..rank).rev() {
        idx[slot] = flat % dim;
        flat /= dim;
    }
    idx
}

/// Formats a 0-based index tuple as 1-based digits (`1221`), or joined by
/// `_` once the dimension needs more than one digit.
pub fn index_label(idx: &[usize], dim: usize) -> String {
    let parts: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
    if dim < 10 {
        parts.concat()
    } else {
        parts.join("_")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    #[test]
    fn layout_and_access() {
        let vars = Vars::empty();
        let t = Tensor::from_fn(3, (0, 2), Execution::Sequential, |i| {
            Poly::constant(&vars, int((i[0] * 10 + i[1]) as i64))
        });
        assert_eq!(t.len(), 9);
        assert_eq!(t.get(&[2, 1]).constant_value().unwrap(), int(21));
        assert_eq!(unflatten(7, 3, 2), vec![2, 1]);
        let nz: Vec<_> = t.nonzero().map(|(i, _)| i).collect();
        assert_eq!(nz.len(), 8);
        assert_eq!(index_label(&[0, 1, 1, 0], 6), "1221");
        assert_eq!(index_label(&[9, 0], 12), "10_1");
    }

    #[test]
    #[should_panic(expected = "arity")]
    fn arity_checked() {
        let t = Tensor::zeros(&Vars::empty(), 2, (0, 3));
        t.get(&[0, 1]);
    }

    #[test]
    fn parallel_build_matches_sequential() {
        let vars = Vars::empty();
        let f = |i: &[usize]| Poly::constant(&vars, int((i[0] + 2 * i[1] + 3 * i[2]) as i64));
        assert_eq!(
            Tensor::from_fn(4, (1, 2), Execution::Sequential, f),
            Tensor::from_fn(4, (1, 2), Execution::Parallel, f)
        );
    }
}
