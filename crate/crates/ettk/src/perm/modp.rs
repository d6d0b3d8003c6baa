//! Dense linear algebra over a prime field F_q with q < 2^32.

#[derive(Clone, Copy, Debug)]
pub struct Fq(pub u64);

impl Fq {
    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.0
    }
    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.0 - b) % self.0
    }
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }
    pub fn pow(self, a: u64, e: u64) -> u64 {
        crate::arith::pow_mod(a, e, self.0)
    }
    pub fn inv(self, a: u64) -> u64 {
        assert!(a % self.0 != 0, "inverse of zero");
        self.pow(a, self.0 - 2)
    }

    /// Smallest generator of F_q^*.
    pub fn primitive_root(self) -> u64 {
        let q = self.0;
        let ps = crate::arith::prime_divisors(q - 1);
        (2..q)
            .find(|&g| ps.iter().all(|&r| self.pow(g, (q - 1) / r) != 1))
            .expect("F_q^* is cyclic")
    }

    /// Basis of {x : M x = 0} for an r×c matrix.
    pub fn nullspace(self, m: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
        let mut a: Vec<Vec<u64>> = m.to_vec();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            let Some(p) = (row..a.len()).find(|&r| a[r][col] != 0) else {
                continue;
            };
            a.swap(row, p);
            let s = self.inv(a[row][col]);
            for x in a[row].iter_mut() {
                *x = self.mul(*x, s);
            }
            for r in 0..a.len() {
                if r != row && a[r][col] != 0 {
                    let f = a[r][col];
                    for c in 0..cols {
                        let v = self.mul(f, a[row][c]);
                        a[r][c] = self.sub(a[r][c], v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0; cols];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.sub(0, a[r][f]);
                }
                v
            })
            .collect()
    }

    /// Inverse of a square matrix, which must be invertible.
    pub fn invert(self, m: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let n = m.len();
        let mut a: Vec<Vec<u64>> = m
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.clone();
                row.extend((0..n).map(|j| u64::from(i == j)));
                row
            })
            .collect();
        for col in 0..n {
            let p = (col..n).find(|&r| a[r][col] != 0).expect("invertible");
            a.swap(col, p);
            let s = self.inv(a[col][col]);
            for x in a[col].iter_mut() {
                *x = self.mul(*x, s);
            }
            for r in 0..n {
                if r != col && a[r][col] != 0 {
                    let f = a[r][col];
                    for c in 0..2 * n {
                        let v = self.mul(f, a[col][c]);
                        a[r][c] = self.sub(a[r][c], v);
                    }
                }
            }
        }
        a.into_iter().map(|r| r[n..].to_vec()).collect()
    }

    pub fn matmul(self, a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let cols = b.first().map_or(0, Vec::len);
        a.iter()
            .map(|r| {
                (0..cols)
                    .map(|j| r.iter().zip(b).fold(0, |s, (&x, br)| self.add(s, self.mul(x, br[j]))))
                    .collect()
            })
            .collect()
    }

    /// Characteristic polynomial det(xI − A), constant term first, by
    /// Faddeev–LeVerrier (valid while q exceeds the dimension).
    pub fn charpoly(self, a: &[Vec<u64>]) -> Vec<u64> {
        let n = a.len();
        let mut c = vec![0u64; n + 1];
        c[n] = 1;
        let mut m = vec![vec![0u64; n]; n];
        for k in 1..=n {
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = self.add(row[i], c[n + 1 - k]);
            }
            m = self.matmul(a, &m);
            let tr = (0..n).fold(0, |s, i| self.add(s, m[i][i]));
            c[n - k] = self.mul(self.sub(0, tr), self.inv(k as u64 % self.0));
        }
        c
    }

    pub fn eval(self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }
}
