//! Brute-force reference implementations shared by the integration tests.
//! They work on plain vectors and never call into the library's algorithms.

#![allow(dead_code)]

use rotsys::{FamilyTag, Label, RotationSystem};

pub type Raw = Vec<(Label, Vec<Label>)>;

pub fn raw(pi: &RotationSystem) -> Raw {
    pi.iter().map(|(l, r)| (l, r.entries().to_vec())).collect()
}

pub fn cyc_eq(a: &[Label], b: &[Label]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|r| (0..a.len()).all(|k| a[(r + k) % a.len()] == b[k]))
}

pub fn raw_eq(a: &Raw, b: &Raw) -> bool {
    a.len() == b.len()
        && a
            .iter()
            .zip(b)
            .all(|((la, ra), (lb, rb))| la == lb && cyc_eq(ra, rb))
}

/// `C_m(i) = 1..i-1, i+1..m` and `T_m(i) = m, m-1, ..., i+1, 1, ..., i-1`.
pub fn naive_canonical(tag: FamilyTag, m: usize) -> Raw {
    let m = m as Label;
    (1..=m)
        .map(|i| {
            let c: Vec<Label> = (1..=m).filter(|&x| x != i).collect();
            let t: Vec<Label> = (i + 1..=m).rev().chain(1..i).collect();
            let rot = match tag {
                FamilyTag::C => c,
                FamilyTag::T => t,
                FamilyTag::CInv => c.into_iter().rev().collect(),
                FamilyTag::TInv => t.into_iter().rev().collect(),
            };
            (i, rot)
        })
        .collect()
}

pub fn naive_induce(pi: &Raw, subset: &[Label]) -> Raw {
    pi.iter()
        .filter(|(l, _)| subset.contains(l))
        .map(|(l, r)| (*l, r.iter().copied().filter(|x| subset.contains(x)).collect()))
        .collect()
}

pub fn naive_invert(pi: &Raw) -> Raw {
    pi.iter()
        .map(|(l, r)| (*l, r.iter().rev().copied().collect()))
        .collect()
}

/// Some rotation of the cycle lists every smaller label before every larger one.
pub fn naive_separated_element(i: Label, rot: &[Label]) -> bool {
    let k = rot.iter().filter(|&&x| x < i).count();
    (0..rot.len().max(1)).any(|start| {
        let seq: Vec<Label> = (0..rot.len()).map(|j| rot[(start + j) % rot.len()]).collect();
        seq[..k].iter().all(|&x| x < i) && seq[k..].iter().all(|&x| x > i)
    })
}

pub fn naive_separated(pi: &Raw) -> bool {
    pi.iter().all(|(i, r)| naive_separated_element(*i, r))
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Some bijection `labels(b) -> labels(a)` maps `b` onto `a`.
pub fn naive_equivalent(a: &Raw, b: &Raw) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let perms = permutations(a.len());
    perms.iter().any(|p| {
        let image = |x: Label| {
            let j = b.iter().position(|(l, _)| *l == x).unwrap();
            a[p[j]].0
        };
        b.iter().enumerate().all(|(j, (_, rb))| {
            let mapped: Vec<Label> = rb.iter().map(|&x| image(x)).collect();
            cyc_eq(&a[p[j]].1, &mapped)
        })
    })
}

pub fn subsets(labels: &[Label], m: usize) -> Vec<Vec<Label>> {
    let n = labels.len();
    (0u32..1 << n)
        .filter(|mask| mask.count_ones() as usize == m)
        .map(|mask| (0..n).filter(|&k| mask >> k & 1 == 1).map(|k| labels[k]).collect())
        .collect()
}

pub fn naive_contains_tag(pi: &Raw, tag: FamilyTag, m: usize) -> bool {
    let labels: Vec<Label> = pi.iter().map(|(l, _)| *l).collect();
    let canon = naive_canonical(tag, m);
    subsets(&labels, m)
        .iter()
        .any(|s| naive_equivalent(&canon, &naive_induce(pi, s)))
}

pub fn naive_contains(pi: &Raw, m: usize) -> bool {
    FamilyTag::ALL.iter().any(|&t| naive_contains_tag(pi, t, m))
}

/// Lengths of the longest increasing and longest decreasing subsequences by
/// trying every subset of positions.
pub fn exhaustive_lis_lds<T: Ord>(seq: &[T]) -> (usize, usize) {
    let n = seq.len();
    let mut inc = 0;
    let mut dec = 0;
    for mask in 0u32..1 << n {
        let picked: Vec<&T> = (0..n).filter(|&k| mask >> k & 1 == 1).map(|k| &seq[k]).collect();
        let len = picked.len();
        if picked.windows(2).all(|w| w[0] < w[1]) {
            inc = inc.max(len);
        }
        if picked.windows(2).all(|w| w[0] > w[1]) {
            dec = dec.max(len);
        }
    }
    (inc, dec)
}

pub fn ceil_sqrt(x: u64) -> u64 {
    let mut r = (x as f64).sqrt() as u64;
    while r * r < x {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= x {
        r -= 1;
    }
    r
}

/// Worst-case size after running the arc sieve on `n` elements.
pub fn worst_separated(mut n: u64) -> u64 {
    let mut s = 1;
    while s + 1 < n {
        n = (s + 1) + (n - s - 1).div_ceil(s);
        s += 1;
    }
    n
}

/// Worst-case size after running a monotone sieve on `n` elements.
pub fn worst_monotone(mut n: u64) -> u64 {
    let mut s = 0;
    while s + 1 < n {
        n = (s + 1) + ceil_sqrt(n - s - 1);
        s += 1;
    }
    n
}

pub fn least_n(t: u64, worst: fn(u64) -> u64) -> u64 {
    (1..).find(|&n| worst(n) >= t).unwrap()
}
