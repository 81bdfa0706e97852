use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Row Hermite normal form over Z: echelon with positive pivots and entries
/// above each pivot reduced into `[0, pivot)`. Zero rows are dropped.
pub(crate) fn row_hnf(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        loop {
            let pivot = (r..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()));
            let Some(k) = pivot else { break };
            rows.swap(r, k);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let (head, tail) = rows.split_at_mut(i);
                for (x, y) in tail[0].iter_mut().zip(&head[r]) {
                    *x -= &q * y;
                }
                done &= tail[0][c].is_zero();
            }
            if done {
                break;
            }
        }
        if r == rows.len() || rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            rows[r].iter_mut().for_each(|x| *x = -&*x);
        }
        for i in 0..r {
            let q = rows[i][c].div_floor(&rows[r][c]);
            if q.is_zero() {
                continue;
            }
            let (head, tail) = rows.split_at_mut(r);
            for (x, y) in head[i].iter_mut().zip(&tail[0]) {
                *x -= &q * y;
            }
        }
        r += 1;
    }
    rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    rows
}

/// Basis of `{a in Z^r : a E = 0 mod modulus}` (or `a E = 0` when `modulus`
/// is `None`), for an `r x k` integer matrix `E`.
pub(crate) fn solution_lattice(e: &[Vec<i64>], k: usize, modulus: Option<&BigInt>) -> Vec<Vec<BigInt>> {
    let r = e.len();
    let mut rows: Vec<Vec<BigInt>> = e
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v: Vec<BigInt> = row.iter().map(|&x| BigInt::from(x)).collect();
            v.extend((0..r).map(|j| BigInt::from((i == j) as i64)));
            v
        })
        .collect();
    if let Some(q) = modulus {
        for j in 0..k {
            let mut v = vec![BigInt::zero(); k + r];
            v[j] = q.clone();
            rows.push(v);
        }
    }
    row_hnf(rows)
        .into_iter()
        .filter(|row| row[..k].iter().all(Zero::is_zero))
        .map(|row| row[k..].to_vec())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn small_hnf() {
        let h = row_hnf(big(&[&[2, 4], &[3, 5]]));
        assert_eq!(h, big(&[&[1, 1], &[0, 2]]));
        let h = row_hnf(big(&[&[0, 0], &[0, -3], &[0, 6]]));
        assert_eq!(h, big(&[&[0, 3]]));
    }

    #[test]
    fn lattices() {
        // a*2 + b*1 = 0 mod 4
        let l = solution_lattice(&[vec![2], vec![1]], 1, Some(&BigInt::from(4)));
        for v in &l {
            assert_eq!((&v[0] * 2 + &v[1]) % 4, BigInt::zero());
        }
        assert_eq!(l.len(), 2);
        // determinant of the lattice is 4
        let det = &l[0][0] * &l[1][1] - &l[0][1] * &l[1][0];
        assert_eq!(det.abs(), BigInt::from(4));
        let kernel = solution_lattice(&[vec![1, 0], vec![0, 1]], 2, None);
        assert!(kernel.is_empty());
        let kernel = solution_lattice(&[vec![0], vec![0]], 1, None);
        assert_eq!(kernel.len(), 2);
    }
}
