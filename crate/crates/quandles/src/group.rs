//! Finite groups given by Cayley tables, used as carriers for the
//! conjugation, core and Alexander quandle constructions.

use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("empty Cayley table")]
    Empty,
    #[error("Cayley table is not square: row {row} has length {len}, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("entry out of range at ({g},{h}): {value} not in 0..{n}")]
    OutOfRange { g: usize, h: usize, value: usize, n: usize },
    #[error("index 0 is not an identity: fails at {witness}")]
    IdentityNotZero { witness: usize },
    #[error("multiplication is not associative at ({a},{b},{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {g} has no inverse")]
    NoInverse { g: usize },
    #[error("map is not a group automorphism")]
    NotAutomorphism,
    #[error("parse error: {0}")]
    Parse(String),
}

/// A finite group on `{0, .., n-1}` with identity fixed at index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    cayley: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Validates the group axioms and the identity-at-0 convention.
    pub fn from_cayley(cayley: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = cayley.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        for (row, r) in cayley.iter().enumerate() {
            if r.len() != n {
                return Err(GroupError::NotSquare { row, len: r.len(), n });
            }
            for (h, &v) in r.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::OutOfRange { g: row, h, value: v, n });
                }
            }
        }
        for g in 0..n {
            if cayley[0][g] != g || cayley[g][0] != g {
                return Err(GroupError::IdentityNotZero { witness: g });
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let mut inv = vec![usize::MAX; n];
        for g in 0..n {
            match (0..n).find(|&h| cayley[g][h] == 0 && cayley[h][g] == 0) {
                Some(h) => inv[g] = h,
                None => return Err(GroupError::NoInverse { g }),
            }
        }
        Ok(FiniteGroup { n, cayley, inv })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.cayley[g][h]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    /// `g^k` for any integer exponent.
    pub fn pow(&self, g: usize, k: i64) -> usize {
        let (mut base, mut k) = if k < 0 { (self.inv[g], -k) } else { (g, k) };
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// True if `phi` (a permutation of `0..n`) satisfies `phi(gh) = phi(g)phi(h)`.
    pub fn is_automorphism(&self, phi: &[usize]) -> bool {
        if phi.len() != self.n {
            return false;
        }
        let mut seen = vec![false; self.n];
        for &v in phi {
            if v >= self.n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        for g in 0..self.n {
            for h in 0..self.n {
                if phi[self.cayley[g][h]] != self.cayley[phi[g]][phi[h]] {
                    return false;
                }
            }
        }
        true
    }

    /// Cyclic group of order `n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group needs n >= 1");
        let cayley = (0..n).map(|g| (0..n).map(|h| (g + h) % n).collect()).collect();
        Self::from_cayley(cayley).expect("cyclic table is a group")
    }

    /// Dihedral group of order `2n`, presented as rotations `r^i` and
    /// reflections `r^i s`; element `(i, j)` is stored at index `j*n + i`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1, "dihedral group needs n >= 1");
        let idx = |i: usize, j: usize| j * n + i;
        let mut cayley = vec![vec![0; 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..2 {
                for i2 in 0..n {
                    for j2 in 0..2 {
                        // r^i s^j . r^i2 s^j2 = r^(i + (-1)^j i2) s^(j+j2)
                        let rot = if j == 0 { (i + i2) % n } else { (i + n - i2 % n) % n };
                        cayley[idx(i, j)][idx(i2, j2)] = idx(rot, (j + j2) % 2);
                    }
                }
            }
        }
        Self::from_cayley(cayley).expect("dihedral table is a group")
    }

    /// Symmetric group on `k` letters; permutations are indexed in
    /// lexicographic order, so the identity sits at index 0.
    pub fn symmetric(k: usize) -> Self {
        use itertools::Itertools;
        assert!(k >= 1, "symmetric group needs k >= 1");
        let perms: Vec<Vec<usize>> = (0..k).permutations(k).collect();
        let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let compose = |p: &[usize], q: &[usize]| (0..k).map(|x| p[q[x]]).collect::<Vec<_>>();
        let cayley = perms
            .iter()
            .map(|p| perms.iter().map(|q| index_of(&compose(p, q))).collect())
            .collect();
        Self::from_cayley(cayley).expect("symmetric table is a group")
    }

    /// Direct product; element `(a, b)` is stored at index `a*|B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let n = a.n * b.n;
        let idx = |x: usize, y: usize| x * b.n + y;
        let mut cayley = vec![vec![0; n]; n];
        for x1 in 0..a.n {
            for y1 in 0..b.n {
                for x2 in 0..a.n {
                    for y2 in 0..b.n {
                        cayley[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
                    }
                }
            }
        }
        Self::from_cayley(cayley).expect("product table is a group")
    }

    /// Parses the `.grp` format: `#` comment lines, a size line, then the
    /// Cayley table row by row. Group axioms are verified.
    pub fn from_grp_str(text: &str) -> Result<Self, GroupError> {
        let table = super::quandle::parse_table(text).map_err(GroupError::Parse)?;
        Self::from_cayley(table)
    }

    pub fn to_grp_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.n);
        for row in &self.cayley {
            let strs: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", strs.join(" "));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups_are_valid() {
        for n in 1..=12 {
            let g = FiniteGroup::cyclic(n);
            assert_eq!(g.size(), n);
            assert_eq!(g.inv(if n > 1 { 1 } else { 0 }), (n - 1) % n);
        }
    }

    #[test]
    fn dihedral_and_symmetric_are_valid() {
        for n in 1..=6 {
            assert_eq!(FiniteGroup::dihedral(n).size(), 2 * n);
        }
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.size(), 6);
        // S_3 is not abelian.
        let noncomm = (0..6).any(|g| (0..6).any(|h| s3.mul(g, h) != s3.mul(h, g)));
        assert!(noncomm);
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let g = FiniteGroup::symmetric(3);
        for x in 0..g.size() {
            let mut acc = 0;
            for k in 0..=6 {
                assert_eq!(g.pow(x, k), acc);
                acc = g.mul(acc, x);
            }
            assert_eq!(g.pow(x, -1), g.inv(x));
        }
    }

    #[test]
    fn rejects_bad_tables() {
        // identity not at 0
        let t = vec![vec![1, 0], vec![0, 1]];
        assert!(matches!(
            FiniteGroup::from_cayley(t),
            Err(GroupError::IdentityNotZero { .. })
        ));
        // Z_2 x Z_2 given correctly passes
        let klein = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert_eq!(klein.size(), 4);
        for g in 0..4 {
            assert_eq!(klein.mul(g, g), 0);
        }
    }

    #[test]
    fn automorphism_check() {
        let z5 = FiniteGroup::cyclic(5);
        let phi: Vec<usize> = (0..5).map(|x| (2 * x) % 5).collect();
        assert!(z5.is_automorphism(&phi));
        let not_phi: Vec<usize> = vec![0, 2, 1, 3, 4];
        assert!(!z5.is_automorphism(&not_phi));
    }

    #[test]
    fn grp_round_trip() {
        let g = FiniteGroup::dihedral(3);
        let s = g.to_grp_string();
        let h = FiniteGroup::from_grp_str(&s).unwrap();
        assert_eq!(g, h);
    }
}
