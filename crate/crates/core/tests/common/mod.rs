//! Independent reference computations shared by the integration tests.
//! Nothing here calls the library's distance or LCD routines.
#![allow(dead_code)]

use galois_lcd::{Element, Field, LinearCode};

/// Minimum distance by enumerating every message vector.
pub fn brute_distance(code: &LinearCode) -> Option<usize> {
    let f = code.field();
    let l = code.dimension();
    let n = code.length();
    if l == 0 {
        return None;
    }
    let elems: Vec<Element> = f.elements().collect();
    let q = elems.len();
    let rows = code.generator().row_vecs();
    let mut digits = vec![0usize; l];
    let mut best = n;
    loop {
        let mut i = 0;
        while i < l {
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == l {
            break;
        }
        let mut w = 0;
        for j in 0..n {
            let mut acc = Element::ZERO;
            for (r, &d) in rows.iter().zip(&digits) {
                acc = f.add(acc, f.mul(elems[d], r[j]));
            }
            if !acc.is_zero() {
                w += 1;
            }
        }
        best = best.min(w);
    }
    Some(best)
}

/// `sum x_i y_i^{p^k}` computed with repeated p-th powers.
pub fn galois_form(f: &Field, x: &[Element], y: &[Element], k: usize) -> Element {
    let p = f.characteristic();
    x.iter().zip(y).fold(Element::ZERO, |acc, (&a, &b)| {
        let mut c = b;
        for _ in 0..k {
            c = f.pow(c, p);
        }
        f.add(acc, f.mul(a, c))
    })
}

/// Whether some nonzero codeword is `[.,.]_k`-orthogonal to every generator
/// row, by enumerating codewords.
pub fn brute_hull_nonzero(code: &LinearCode, k: usize) -> bool {
    let f = code.field();
    let l = code.dimension();
    let n = code.length();
    if l == 0 {
        return false;
    }
    let elems: Vec<Element> = f.elements().collect();
    let q = elems.len();
    let rows = code.generator().row_vecs();
    let mut digits = vec![0usize; l];
    loop {
        let mut i = 0;
        while i < l {
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == l {
            return false;
        }
        let word: Vec<Element> = (0..n)
            .map(|j| {
                rows.iter()
                    .zip(&digits)
                    .fold(Element::ZERO, |acc, (r, &d)| f.add(acc, f.mul(elems[d], r[j])))
            })
            .collect();
        if rows.iter().all(|r| galois_form(f, r, &word, k).is_zero()) {
            return true;
        }
    }
}

/// Determinant by cofactor expansion.
pub fn cofactor_det(f: &Field, m: &[Vec<Element>]) -> Element {
    let n = m.len();
    if n == 0 {
        return Element::ONE;
    }
    let mut acc = Element::ZERO;
    for j in 0..n {
        let minor: Vec<Vec<Element>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let term = f.mul(m[0][j], cofactor_det(f, &minor));
        acc = if j % 2 == 0 { f.add(acc, term) } else { f.sub(acc, term) };
    }
    acc
}

/// Residues `x` in `0..rn` with `x = 1 (mod r)` and multiplicative orbits
/// `x, qx, q^2 x, ...`, computed by walking the orbit directly.
pub fn orbit_of(x: u64, mult: u64, rn: u64) -> Vec<u64> {
    let mut out = vec![x % rn];
    let mut y = (x * mult) % rn;
    while y != x % rn {
        out.push(y);
        y = (y * mult) % rn;
    }
    out.sort_unstable();
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
