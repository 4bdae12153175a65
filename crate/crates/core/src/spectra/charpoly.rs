//! Exact characteristic polynomials of small-integer matrices.
//!
//! Two independent routes:
//!
//! * [`char_poly`]: reduction to upper Hessenberg form over several word-size
//!   prime fields, characteristic polynomial of the Hessenberg matrix in each
//!   field, then Chinese remaindering. The number of primes is chosen from a
//!   rigorous coefficient bound, so the lift is exact. Cost is `O(n^3)` per
//!   prime, which keeps orders of several hundred practical.
//! * [`char_poly_berkowitz`]: Berkowitz's division-free algorithm directly
//!   over the integers, `O(n^4)` big-integer operations. Used as the
//!   reference for the modular route.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::modular::{primes, MontField};
use super::poly::IntPolynomial;
use crate::graph::Graph;

/// Dense square integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IntMatrix {
            n,
            data: rows.concat(),
        }
    }

    pub fn adjacency(g: &Graph) -> Self {
        let mut m = IntMatrix::zeros(g.order());
        for (u, v) in g.edges() {
            m.set(u, v, 1);
            m.set(v, u, 1);
        }
        m
    }

    /// `D - A`.
    pub fn laplacian(g: &Graph) -> Self {
        let mut m = IntMatrix::zeros(g.order());
        for (u, v) in g.edges() {
            m.set(u, v, -1);
            m.set(v, u, -1);
        }
        for v in 0..g.order() {
            m.set(v, v, g.degree(v) as i64);
        }
        m
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: i64) {
        self.data[i * self.n + j] = x;
    }

    pub fn max_abs_row_sum(&self) -> u64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).unsigned_abs()).sum())
            .max()
            .unwrap_or(0)
    }
}

/// Upper bound on the absolute value of every coefficient of `det(xI - M)`.
///
/// Every eigenvalue is bounded by the maximum absolute row sum `R`, so the
/// coefficient of `x^(n-i)`, an elementary symmetric function of the
/// eigenvalues, is at most `C(n, i) R^i`.
pub fn coefficient_bound(m: &IntMatrix) -> BigUint {
    let n = m.order();
    let r = BigUint::from(m.max_abs_row_sum());
    let mut best = BigUint::one();
    let mut binom = BigUint::one();
    let mut rpow = BigUint::one();
    for i in 1..=n {
        binom = binom * BigUint::from(n - i + 1) / BigUint::from(i);
        rpow *= &r;
        let term = &binom * &rpow;
        if term > best {
            best = term;
        }
    }
    best
}

/// `det(xI - M)` modulo `f.modulus()`, as plain residues, lowest power first.
fn char_poly_mod(m: &IntMatrix, f: &MontField) -> Vec<u64> {
    let n = m.order();
    let mut h: Vec<u64> = m.data.iter().map(|&x| f.enter(x)).collect();
    let at = |i: usize, j: usize| i * n + j;

    // similarity transform to upper Hessenberg form
    for col in 0..n.saturating_sub(2) {
        let piv_row = col + 1;
        let Some(pivot) = (piv_row..n).find(|&i| h[at(i, col)] != 0) else {
            continue;
        };
        if pivot != piv_row {
            for j in 0..n {
                h.swap(at(pivot, j), at(piv_row, j));
            }
            for i in 0..n {
                h.swap(at(i, pivot), at(i, piv_row));
            }
        }
        let inv = f.inv(h[at(piv_row, col)]);
        for i in piv_row + 1..n {
            let hic = h[at(i, col)];
            if hic == 0 {
                continue;
            }
            let u = f.mul(hic, inv);
            // row_i -= u * row_piv
            for j in col..n {
                let t = f.mul(u, h[at(piv_row, j)]);
                h[at(i, j)] = f.sub(h[at(i, j)], t);
            }
            // col_piv += u * col_i
            for r in 0..n {
                let t = f.mul(u, h[at(r, i)]);
                h[at(r, piv_row)] = f.add(h[at(r, piv_row)], t);
            }
        }
    }

    // p_k = det(xI - H[0..k, 0..k]) via the Hessenberg recurrence
    let one = f.one();
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![one]);
    for k in 1..=n {
        let c = k - 1;
        let prev = &polys[k - 1];
        // (x - h_cc) * p_{k-1}
        let mut next = vec![0u64; k + 1];
        for (i, &a) in prev.iter().enumerate() {
            next[i + 1] = f.add(next[i + 1], a);
            next[i] = f.sub(next[i], f.mul(h[at(c, c)], a));
        }
        // - sum_{r<c} h_{r,c} * prod_{l=r+1..=c} h_{l,l-1} * p_r
        let mut prod = one;
        for r in (0..c).rev() {
            prod = f.mul(prod, h[at(r + 1, r)]);
            if prod == 0 {
                break;
            }
            let coef = f.mul(prod, h[at(r, c)]);
            if coef == 0 {
                continue;
            }
            for (i, &a) in polys[r].iter().enumerate() {
                next[i] = f.sub(next[i], f.mul(coef, a));
            }
        }
        polys.push(next);
    }
    polys[n].iter().map(|&x| f.leave(x)).collect()
}

/// Exact `det(xI - M)` by multi-modular Hessenberg reduction.
pub fn char_poly(m: &IntMatrix) -> IntPolynomial {
    let n = m.order();
    if n == 0 {
        return IntPolynomial::from_i64(&[1]);
    }
    // need prod(primes) > 2 * bound; each prime exceeds 2^61
    let bound_bits = coefficient_bound(m).bits() + 1;
    let count = (bound_bits / 61 + 1) as usize;
    let ps = primes(count);

    let mut modulus = BigInt::one();
    let mut residues: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    for &p in &ps {
        let f = MontField::new(p);
        let image = char_poly_mod(m, &f);
        let pb = BigInt::from(p);
        // x = r + M * ((a - r) * M^{-1} mod p)
        let m_mod_p = (&modulus % &pb)
            .to_u64_digits()
            .1
            .first()
            .copied()
            .unwrap_or(0);
        let m_inv = f.leave(f.inv(f.enter(m_mod_p as i64)));
        for (r, &a) in residues.iter_mut().zip(&image) {
            let r_mod_p = (&*r % &pb).to_u64_digits().1.first().copied().unwrap_or(0);
            let diff = (a as u128 + p as u128 - r_mod_p as u128) % p as u128;
            let t = (diff * m_inv as u128 % p as u128) as u64;
            *r += &modulus * BigInt::from(t);
        }
        modulus *= pb;
    }
    let half: BigInt = &modulus >> 1u32;
    for r in &mut residues {
        if *r > half {
            *r -= &modulus;
        }
    }
    IntPolynomial::new(residues)
}

/// Berkowitz's algorithm over the integers.
pub fn char_poly_berkowitz(m: &IntMatrix) -> IntPolynomial {
    let n = m.order();
    if n == 0 {
        return IntPolynomial::from_i64(&[1]);
    }
    let a = |i: usize, j: usize| BigInt::from(m.get(i, j));
    // highest power first while iterating
    let mut v: Vec<BigInt> = vec![BigInt::one(), -a(0, 0)];
    for r in 1..n {
        // Toeplitz column [1, -a_rr, -R C, -R S C, ..., -R S^{r-1} C]
        let mut t = Vec::with_capacity(r + 2);
        t.push(BigInt::one());
        t.push(-a(r, r));
        let mut col: Vec<BigInt> = (0..r).map(|i| a(i, r)).collect();
        for _ in 0..r {
            let dot: BigInt = (0..r).map(|j| a(r, j) * &col[j]).sum();
            t.push(-dot);
            col = (0..r)
                .map(|i| (0..r).map(|j| a(i, j) * &col[j]).sum())
                .collect();
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for j in 0..=i.min(r) {
                *slot += &t[i - j] * &v[j];
            }
        }
        v = next;
    }
    v.reverse();
    IntPolynomial::new(v)
}

/// Count of primes the modular route uses for `m` (for reporting).
pub fn primes_needed(m: &IntMatrix) -> usize {
    (((coefficient_bound(m).bits() + 1) / 61) + 1) as usize
}
