//! Named Coxeter systems.
//!
//! | name | diagram |
//! |------|---------|
//! | `affine-A<n>` | cycle of `n+1` nodes, all labels 3 (`affine-A1` has one label `inf`) |
//! | `affine-B<n>` | `n >= 3`: fork at one end, label 4 on the last bond; `affine-B2` is `affine-C2` |
//! | `affine-C<n>` | chain `4, 3, ..., 3, 4` |
//! | `affine-D<n>` | `n >= 4`: forks at both ends |
//! | `affine-G2`, `affine-F4` | chains `3, 6` and `3, 3, 4, 3` |
//! | `I2:<m>` | dihedral, `m` may be `inf` |
//! | `rank3:<type>:<a>:<b>` | `m(s,t) = a`, `m(t,u) = b`, `m(s,u) = 2`; type `I` needs `a = 3, b >= 7`, `II` needs `a, b >= 5`, `III` needs `a = 4, b >= 5` |
//! | `linear:<l1>,<l2>,...` | chain with the given labels |
//! | `cycle:<l1>,...` | cycle with the given labels |
//! | `right-angled:<n>:<i>-<j>,...` | listed pairs are `inf`, every other pair commutes |
//! | `complete:<l1>,...` | labels for the pairs `(0,1), (0,2), ..., (n-2,n-1)` in order |

use crate::error::{CoxeterError, Result};
use crate::system::{CoxeterMatrix, CoxeterSystem, Label};

/// Largest `n` accepted by the affine families.
pub const MAX_AFFINE_RANK: usize = 5;

pub fn preset(name: &str) -> Result<CoxeterSystem> {
    let matrix = preset_matrix(name)?;
    CoxeterSystem::with_default_names(matrix)
}

pub fn preset_matrix(name: &str) -> Result<CoxeterMatrix> {
    let bad = || CoxeterError::UnknownPreset(name.to_string());
    if let Some(rest) = name.strip_prefix("affine-") {
        let (family, n) = rest.split_at(1);
        let n: usize = n.parse().map_err(|_| bad())?;
        return affine(family, n).ok_or_else(bad);
    }
    let (kind, args) = name.split_once(':').ok_or_else(bad)?;
    match kind {
        "I2" => {
            let m = Label::parse(args).map_err(|_| bad())?;
            CoxeterMatrix::from_pairs(2, &[(0, 1, m)])
        }
        "rank3" => {
            let parts: Vec<&str> = args.split(':').collect();
            let [ty, a, b] = parts[..] else { return Err(bad()) };
            let a: u32 = a.parse().map_err(|_| bad())?;
            let b: u32 = b.parse().map_err(|_| bad())?;
            let ok = match ty {
                "I" => a == 3 && b >= 7,
                "II" => a >= 5 && b >= 5,
                "III" => a == 4 && b >= 5,
                _ => return Err(bad()),
            };
            if !ok {
                return Err(CoxeterError::UnknownPreset(format!("{}: parameters out of range for type {}", name, ty)));
            }
            rank3(a, b)
        }
        "linear" => {
            let labels = parse_labels(args)?;
            let pairs: Vec<_> = labels.iter().enumerate().map(|(i, &l)| (i, i + 1, l)).collect();
            CoxeterMatrix::from_pairs(labels.len() + 1, &pairs)
        }
        "cycle" => {
            let labels = parse_labels(args)?;
            let n = labels.len();
            if n < 3 {
                return Err(CoxeterError::UnknownPreset(format!("{}: a cycle needs at least 3 labels", name)));
            }
            let pairs: Vec<_> = labels.iter().enumerate().map(|(i, &l)| (i, (i + 1) % n, l)).collect();
            CoxeterMatrix::from_pairs(n, &pairs)
        }
        "right-angled" => {
            let (n, edges) = args.split_once(':').unwrap_or((args, ""));
            let n: usize = n.parse().map_err(|_| bad())?;
            let mut pairs = Vec::new();
            for e in edges.split(',').filter(|e| !e.is_empty()) {
                let (i, j) = e.split_once('-').ok_or_else(bad)?;
                let i: usize = i.trim().parse().map_err(|_| bad())?;
                let j: usize = j.trim().parse().map_err(|_| bad())?;
                if i >= n || j >= n || i == j {
                    return Err(CoxeterError::UnknownPreset(format!("{}: bad edge {}", name, e)));
                }
                pairs.push((i, j, Label::Infinite));
            }
            CoxeterMatrix::from_pairs(n, &pairs)
        }
        "complete" => {
            let labels = parse_labels(args)?;
            let n = (2..=64).find(|n| n * (n - 1) / 2 == labels.len()).ok_or_else(|| {
                CoxeterError::UnknownPreset(format!("{}: label count is not a triangular number", name))
            })?;
            let mut pairs = Vec::new();
            let mut it = labels.iter();
            for i in 0..n {
                for j in i + 1..n {
                    pairs.push((i, j, *it.next().expect("counted")));
                }
            }
            CoxeterMatrix::from_pairs(n, &pairs)
        }
        _ => Err(bad()),
    }
}

fn parse_labels(text: &str) -> Result<Vec<Label>> {
    text.split(',').map(|l| Label::parse(l.trim())).collect()
}

/// `m(s,t) = a`, `m(t,u) = b`, `m(s,u) = 2`.
pub fn rank3(a: u32, b: u32) -> Result<CoxeterMatrix> {
    CoxeterMatrix::from_pairs(3, &[(0, 1, Label::Finite(a)), (1, 2, Label::Finite(b))])
}

fn chain(labels: &[u32]) -> Vec<(usize, usize, Label)> {
    labels.iter().enumerate().map(|(i, &l)| (i, i + 1, Label::Finite(l))).collect()
}

fn affine(family: &str, n: usize) -> Option<CoxeterMatrix> {
    if n == 0 || n > MAX_AFFINE_RANK {
        return None;
    }
    let three = Label::Finite(3);
    let pairs: Vec<(usize, usize, Label)> = match family {
        "A" if n == 1 => vec![(0, 1, Label::Infinite)],
        "A" => (0..=n).map(|i| (i, (i + 1) % (n + 1), three)).collect(),
        "B" if n == 2 => chain(&[4, 4]),
        "B" if n >= 3 => {
            let mut p = vec![(0, 2, three), (1, 2, three)];
            for i in 2..n {
                p.push((i, i + 1, Label::Finite(if i + 1 == n { 4 } else { 3 })));
            }
            p
        }
        "C" if n >= 2 => {
            let mut labels = vec![3; n];
            labels[0] = 4;
            labels[n - 1] = 4;
            chain(&labels)
        }
        "D" if n >= 4 => {
            let mut p = vec![(0, 2, three), (1, 2, three)];
            for i in 2..n - 2 {
                p.push((i, i + 1, three));
            }
            p.push((n - 2, n - 1, three));
            p.push((n - 2, n, three));
            p
        }
        "G" if n == 2 => chain(&[3, 6]),
        "F" if n == 4 => chain(&[3, 3, 4, 3]),
        _ => return None,
    };
    CoxeterMatrix::from_pairs(n + 1, &pairs).ok()
}

/// Presets whose six-column counts are published, with those counts.
pub const PUBLISHED_COUNTS: &[(&str, [usize; 6])] = &[
    ("affine-A2", [6, 6, 16, 9, 16, 9]),
    ("affine-B2", [8, 8, 25, 14, 24, 13]),
    ("affine-G2", [12, 12, 49, 26, 41, 21]),
    ("affine-A3", [12, 12, 125, 28, 125, 28]),
    ("affine-B3", [18, 18, 343, 66, 315, 58]),
    ("affine-C3", [18, 18, 343, 66, 317, 58]),
];

/// The rank 5 row, slow enough to be opt-in.
pub const PUBLISHED_COUNTS_EXTRA: &[(&str, [usize; 6])] = &[("affine-A4", [20, 20, 1296, 75, 1296, 75])];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_shapes() {
        let m = preset_matrix("affine-A2").unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.get(0, 2), Label::Finite(3));
        let m = preset_matrix("affine-B3").unwrap();
        assert_eq!(m.get(0, 2), Label::Finite(3));
        assert_eq!(m.get(0, 1), Label::Finite(2));
        assert_eq!(m.get(2, 3), Label::Finite(4));
        let m = preset_matrix("affine-D4").unwrap();
        assert_eq!((0..5).filter(|&j| m.get(2, j) == Label::Finite(3)).count(), 4);
        assert_eq!(preset_matrix("affine-B2").unwrap(), preset_matrix("affine-C2").unwrap());
    }

    #[test]
    fn rank3_ranges() {
        assert!(preset_matrix("rank3:I:3:7").is_ok());
        assert!(preset_matrix("rank3:I:3:6").is_err());
        assert!(preset_matrix("rank3:II:5:5").is_ok());
        assert!(preset_matrix("rank3:III:4:5").is_ok());
        assert!(preset_matrix("rank3:III:5:5").is_err());
    }

    #[test]
    fn graph_presets() {
        let m = preset_matrix("right-angled:4:0-1,1-2,2-3,3-0").unwrap();
        assert_eq!(m.get(0, 1), Label::Infinite);
        assert_eq!(m.get(0, 2), Label::Finite(2));
        let m = preset_matrix("complete:3,4,5").unwrap();
        assert_eq!(m.get(0, 2), Label::Finite(4));
        assert_eq!(m.get(1, 2), Label::Finite(5));
        let m = preset_matrix("cycle:3,3,4,3").unwrap();
        assert_eq!(m.get(2, 3), Label::Finite(4));
        assert_eq!(m.get(3, 0), Label::Finite(3));
        assert!(preset_matrix("nonsense").is_err());
        assert!(preset_matrix("affine-E6").is_err());
    }
}
