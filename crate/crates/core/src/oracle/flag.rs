use crate::coxeter;

use super::field::{MatrixOverFq, PrimeField};
use super::OracleError;

/// Largest ambient dimension accepted by [`enumerate_flags`].
pub const MAX_FLAG_DIM: usize = 5;
/// Hard cap on the number of flags materialized at once.
pub const MAX_FLAGS: u64 = 1_000_000;

/// A full flag `F_1 < F_2 < ... < F_{n-1}` in `F_q^n`.
///
/// Stored as its unique adapted basis `v_1, ..., v_n` with `F_i = <v_1..v_i>`:
/// each `v_i` has last nonzero entry `1` at its pivot row and vanishes at the
/// pivot rows of all earlier vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlagOverFq {
    n: usize,
    vectors: Vec<u8>,
}

impl FlagOverFq {
    /// Canonical flag of the basis `u_1, ..., u_n` (column vectors).
    pub fn from_basis(field: PrimeField, basis: &[Vec<u8>]) -> Result<Self, OracleError> {
        let n = basis.len();
        let mut vectors: Vec<u8> = Vec::with_capacity(n * n);
        let mut pivots: Vec<usize> = Vec::with_capacity(n);
        for u in basis {
            if u.len() != n {
                return Err(OracleError::Singular);
            }
            let mut v: Vec<u8> = u.iter().map(|&x| x % field.order() as u8).collect();
            for (j, &pj) in pivots.iter().enumerate() {
                let c = v[pj];
                if c != 0 {
                    let w = &vectors[j * n..(j + 1) * n];
                    for r in 0..n {
                        v[r] = field.sub(v[r], field.mul(c, w[r]));
                    }
                }
            }
            let pivot = (0..n)
                .rev()
                .find(|&r| v[r] != 0)
                .ok_or(OracleError::Singular)?;
            let scale = field.inv(v[pivot]);
            for x in v.iter_mut() {
                *x = field.mul(*x, scale);
            }
            pivots.push(pivot);
            vectors.extend_from_slice(&v);
        }
        Ok(FlagOverFq { n, vectors })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    /// The adapted basis vector `v_i`, 1-based.
    pub fn vector(&self, i: usize) -> &[u8] {
        &self.vectors[(i - 1) * self.n..i * self.n]
    }

    pub fn basis(&self) -> Vec<Vec<u8>> {
        (1..=self.n).map(|i| self.vector(i).to_vec()).collect()
    }

    /// Matrix with columns `v_1, ..., v_n`.
    pub fn matrix(&self, field: PrimeField) -> MatrixOverFq {
        let cols: Vec<&[u8]> = (1..=self.n).map(|i| self.vector(i)).collect();
        MatrixOverFq::from_columns(field, self.n, &cols)
    }

    /// `F_i` as the reduced row echelon basis of its row space.
    pub fn subspace(&self, i: usize, field: PrimeField) -> MatrixOverFq {
        let mut m = MatrixOverFq::zeros(field, i, self.n);
        for k in 0..i {
            for (c, &x) in self.vector(k + 1).iter().enumerate() {
                m[(k, c)] = x;
            }
        }
        m.row_space_basis()
    }

    /// `g F`.
    pub fn transform(&self, g: &MatrixOverFq) -> FlagOverFq {
        let field = g.field();
        let moved: Vec<Vec<u8>> = (1..=self.n).map(|i| g.mul_vec(self.vector(i))).collect();
        FlagOverFq::from_basis(field, &moved).expect("invertible matrices move flags to flags")
    }

    /// `dim (F_i ∩ span(e_k : k in rows))` for each `i = 1..=n`.
    pub fn intersection_profile(
        &self,
        rows: std::ops::Range<usize>,
        field: PrimeField,
    ) -> Vec<usize> {
        let outside: Vec<usize> = (0..self.n).filter(|r| !rows.contains(r)).collect();
        (1..=self.n)
            .map(|i| {
                let mut m = MatrixOverFq::zeros(field, i, outside.len());
                for k in 0..i {
                    let v = self.vector(k + 1);
                    for (c, &r) in outside.iter().enumerate() {
                        m[(k, c)] = v[r];
                    }
                }
                i - m.rank()
            })
            .collect()
    }
}

/// `[n]_q! = prod_{k=1}^{n} (q^k - 1)/(q - 1)`, the number of full flags in `F_q^n`.
pub fn flag_count(n: usize, q: u64) -> u64 {
    (1..=n as u32).map(|k| (q.pow(k) - 1) / (q - 1)).product()
}

/// All full flags of `F_q^n`, one per Bruhat normal form, in a fixed order.
pub fn enumerate_flags(n: usize, field: PrimeField) -> Result<Vec<FlagOverFq>, OracleError> {
    let total = flag_count(n, field.order() as u64);
    if n == 0 || n > MAX_FLAG_DIM || total > MAX_FLAGS {
        return Err(OracleError::SizeGuard(format!(
            "{total} flags in F_{}^{n} (limits: n <= {MAX_FLAG_DIM}, {MAX_FLAGS} flags)",
            field.order()
        )));
    }
    let mut out = Vec::with_capacity(total as usize);
    for w in coxeter::all_elements(n) {
        let pivots: Vec<usize> = w.one_line().iter().map(|v| v - 1).collect();
        let free: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| {
                let earlier = &pivots[..i];
                (0..pivots[i])
                    .filter(move |r| !earlier.contains(r))
                    .map(move |r| (i, r))
            })
            .collect();
        let mut values = vec![0u8; free.len()];
        loop {
            let mut basis = vec![vec![0u8; n]; n];
            for (i, &p) in pivots.iter().enumerate() {
                basis[i][p] = 1;
            }
            for (&(i, r), &x) in free.iter().zip(&values) {
                basis[i][r] = x;
            }
            out.push(FlagOverFq::from_basis(field, &basis)?);
            if !advance(&mut values, field.order() as u8) {
                break;
            }
        }
    }
    Ok(out)
}

/// Odometer increment; false once every digit has wrapped.
fn advance(digits: &mut [u8], base: u8) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}
