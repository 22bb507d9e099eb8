//! Dense linear algebra over GF(p) for the modular phase of the
//! character-table computation.

pub fn add(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b % p) % p
}

pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64, p: u64) -> u64 {
    pow(a, p - 2, p)
}

/// Smallest prime p with p = 1 mod e and p > floor.
pub fn find_prime(e: u64, floor: u64) -> u64 {
    let mut p = (floor / e) * e + 1;
    loop {
        if p > floor && is_prime(p) && (p - 1) % e == 0 {
            return p;
        }
        p += e;
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of multiplicative order exactly e mod p (requires e | p-1).
pub fn element_of_order(e: u64, p: u64) -> u64 {
    let cof = (p - 1) / e;
    'outer: for g in 2..p {
        let x = pow(g, cof, p);
        if x == 1 {
            continue;
        }
        // order of x divides e; reject proper divisors
        for q in prime_divisors(e) {
            if pow(x, e / q, p) == 1 {
                continue 'outer;
            }
        }
        return x;
    }
    panic!("no element of order {e} mod {p}");
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// det(m) mod p by Gaussian elimination; m is consumed.
pub fn determinant(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r][col] != 0);
        let Some(pr) = pivot else { return 0 };
        if pr != col {
            m.swap(pr, col);
            det = sub(0, det, p);
        }
        let piv = m[col][col];
        det = mul(det, piv, p);
        let piv_inv = inv(piv, p);
        for r in col + 1..n {
            if m[r][col] == 0 {
                continue;
            }
            let f = mul(m[r][col], piv_inv, p);
            for c in col..n {
                let delta = mul(f, m[col][c], p);
                m[r][c] = sub(m[r][c], delta, p);
            }
        }
    }
    det
}

/// Basis of the kernel of m (rows x cols) over GF(p).
pub fn kernel_basis(m: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = m.to_vec();
    let nrows = rows.len();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut r = 0;
    for c in 0..cols {
        if r >= nrows {
            break;
        }
        if let Some(pr) = (r..nrows).find(|&i| rows[i][c] != 0) {
            rows.swap(r, pr);
            let piv_inv = inv(rows[r][c], p);
            for j in 0..cols {
                rows[r][j] = mul(rows[r][j], piv_inv, p);
            }
            for i in 0..nrows {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    for j in 0..cols {
                        let delta = mul(f, rows[r][j], p);
                        rows[i][j] = sub(rows[i][j], delta, p);
                    }
                }
            }
            pivot_of_col[c] = Some(r);
            r += 1;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for c in 0..cols {
            if let Some(pr) = pivot_of_col[c] {
                v[c] = sub(0, rows[pr][free], p);
            }
        }
        basis.push(v);
    }
    basis
}

/// Characteristic polynomial of a square matrix by Lagrange interpolation
/// of det(xI - m) at n+1 points; coefficients low-degree first.
pub fn char_poly(m: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = m.len();
    assert!((n as u64) < p, "need more interpolation points than dim");
    let xs: Vec<u64> = (0..=n as u64).collect();
    let ys: Vec<u64> = xs
        .iter()
        .map(|&x| {
            let mut shifted = m.to_vec();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] = sub(x, row[i], p);
                for (j, v) in row.iter_mut().enumerate() {
                    if j != i {
                        *v = sub(0, *v, p);
                    }
                }
            }
            determinant(shifted, p)
        })
        .collect();
    lagrange_interpolate(&xs, &ys, p)
}

fn lagrange_interpolate(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    let n = xs.len();
    let mut coeffs = vec![0u64; n];
    for i in 0..n {
        // l_i(x) = prod_{j != i} (x - x_j)/(x_i - x_j)
        let mut num = vec![0u64; n];
        num[0] = 1;
        let mut deg = 0;
        let mut denom = 1u64;
        for j in 0..n {
            if j == i {
                continue;
            }
            // num *= (x - x_j)
            let mut next = vec![0u64; n];
            for d in 0..=deg {
                next[d + 1] = add(next[d + 1], num[d], p);
                next[d] = sub(next[d], mul(num[d], xs[j], p), p);
            }
            num = next;
            deg += 1;
            denom = mul(denom, sub(xs[i], xs[j], p), p);
        }
        let f = mul(ys[i], inv(denom, p), p);
        for d in 0..n {
            coeffs[d] = add(coeffs[d], mul(num[d], f, p), p);
        }
    }
    coeffs
}

pub fn eval_poly(coeffs: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in coeffs.iter().rev() {
        acc = add(mul(acc, x, p), c, p);
    }
    acc
}
