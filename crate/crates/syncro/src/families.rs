//! Named example families used throughout the tests, the command-line tool,
//! and the guide.
//!
//! Every parametrized family is binary with letter `b` acting as the cycle
//! `i -> i + 1 (mod n)` and letter `a` carrying the single rank defect:
//!
//! * `cerny`: `a` is the identity except `n-1 -> 0`; reset threshold
//!   `(n-1)^2` and maximal state complexity `2^n - n`.
//! * `L`: `a` shifts `i -> i + 1` for `i <= n-3`, then `n-2 -> 0`,
//!   `n-1 -> 1`.
//! * `V`: like `L` but `n-1 -> 0`, so two states merge into `0`.
//! * `F`: `a` is the identity except `n-2 -> 0`; defined for odd `n > 3`.
//! * `K`: `a` sends `0 -> 3`, shifts `1..=n-3` up by one, `n-2 -> 1`,
//!   `n-1 -> 0`; needs `n > 5` so those clauses stay disjoint.
//!
//! Two fixed automata round the set out: `fig3`, the four-state example
//! drawn in the guide whose subset graph is small enough to inspect by hand,
//! and `gc_footnote`, the three-state pair of involutions that is not
//! circular even though one of its words acts as a full cycle.

use crate::automaton::SemiAutomaton;
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Cerny,
    L,
    V,
    F,
    K,
    Fig3,
    GcFootnote,
}

/// A family name plus, for the parametrized families, a state count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: Option<usize>,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Cerny,
        Family::L,
        Family::V,
        Family::F,
        Family::K,
        Family::Fig3,
        Family::GcFootnote,
    ];

    /// The stable identifier used on the command line.
    pub fn id(&self) -> &'static str {
        match self {
            Family::Cerny => "cerny",
            Family::L => "L",
            Family::V => "V",
            Family::F => "F",
            Family::K => "K",
            Family::Fig3 => "fig3",
            Family::GcFootnote => "gc_footnote",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.id().eq_ignore_ascii_case(s))
    }

    /// `Some(n)` for the two fixed automata, `None` for parametrized ones.
    pub fn fixed_size(&self) -> Option<usize> {
        match self {
            Family::Fig3 => Some(4),
            Family::GcFootnote => Some(3),
            _ => None,
        }
    }

    fn err(&self, message: &str) -> Error {
        Error::Family {
            family: self.id().to_string(),
            message: message.to_string(),
        }
    }

    fn check_size(&self, n: usize) -> Result<(), Error> {
        match self {
            Family::Cerny if n < 2 => Err(self.err("needs n >= 2")),
            Family::L | Family::V if n < 3 => Err(self.err("needs n >= 3")),
            Family::F if n <= 3 || n.is_multiple_of(2) => Err(self.err("needs odd n > 3")),
            Family::K if n <= 5 => Err(self.err("needs n > 5")),
            _ => Ok(()),
        }
    }
}

/// The defect letter `a` of a parametrized family, as an image array.
fn defect_image(family: Family, n: usize) -> Vec<usize> {
    let mut a: Vec<usize> = (0..n).collect();
    match family {
        Family::Cerny => a[n - 1] = 0,
        Family::L => {
            for (i, v) in a.iter_mut().enumerate().take(n - 2) {
                *v = i + 1;
            }
            a[n - 2] = 0;
            a[n - 1] = 1;
        }
        Family::V => {
            for (i, v) in a.iter_mut().enumerate().take(n - 2) {
                *v = i + 1;
            }
            a[n - 2] = 0;
            a[n - 1] = 0;
        }
        Family::F => a[n - 2] = 0,
        Family::K => {
            a[0] = 3;
            for (i, v) in a.iter_mut().enumerate().take(n - 2).skip(1) {
                *v = i + 1;
            }
            a[n - 2] = 1;
            a[n - 1] = 0;
        }
        Family::Fig3 | Family::GcFootnote => unreachable!("fixed automata have no parameter"),
    }
    a
}

pub fn build_family(spec: &FamilySpec) -> Result<SemiAutomaton, Error> {
    let family = spec.family;
    if let Some(fixed) = family.fixed_size() {
        match spec.n {
            None => {}
            Some(n) if n == fixed => {}
            Some(_) => return Err(family.err(&format!("has a fixed size of {fixed} states"))),
        }
        let delta = match family {
            Family::Fig3 => vec![vec![1, 1], vec![2, 2], vec![1, 3], vec![3, 0]],
            Family::GcFootnote => vec![vec![1, 0], vec![0, 2], vec![2, 1]],
            _ => unreachable!(),
        };
        return SemiAutomaton::new(fixed, 2, delta);
    }

    let n = spec.n.ok_or_else(|| family.err("needs a state count"))?;
    family.check_size(n)?;
    let a = defect_image(family, n);
    let delta = (0..n).map(|i| vec![a[i], (i + 1) % n]).collect();
    SemiAutomaton::new(n, 2, delta)
}

/// Convenience wrapper for the parametrized families.
pub fn build(family: Family, n: usize) -> Result<SemiAutomaton, Error> {
    build_family(&FamilySpec { family, n: Some(n) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letter_image(a: &SemiAutomaton, letter: usize) -> Vec<usize> {
        a.letter_transformation(letter).image().to_vec()
    }

    #[test]
    fn cerny_four() {
        let a = build(Family::Cerny, 4).unwrap();
        assert_eq!(letter_image(&a, 0), vec![0, 1, 2, 0]);
        assert_eq!(letter_image(&a, 1), vec![1, 2, 3, 0]);
    }

    #[test]
    fn k_seven() {
        let a = build(Family::K, 7).unwrap();
        assert_eq!(letter_image(&a, 0), vec![3, 2, 3, 4, 5, 1, 0]);
        assert_eq!(letter_image(&a, 1), vec![1, 2, 3, 4, 5, 6, 0]);
    }

    #[test]
    fn l_and_v_differ_only_at_the_top_state() {
        let l = build(Family::L, 6).unwrap();
        let v = build(Family::V, 6).unwrap();
        assert_eq!(letter_image(&l, 0), vec![1, 2, 3, 4, 0, 1]);
        assert_eq!(letter_image(&v, 0), vec![1, 2, 3, 4, 0, 0]);
    }

    #[test]
    fn f_loops_all_but_one() {
        let f = build(Family::F, 5).unwrap();
        assert_eq!(letter_image(&f, 0), vec![0, 1, 2, 0, 4]);
    }

    #[test]
    fn fixed_automata() {
        let fig3 = build_family(&FamilySpec {
            family: Family::Fig3,
            n: None,
        })
        .unwrap();
        assert_eq!(fig3.delta()[2], vec![1, 3]);

        let fn3 = build_family(&FamilySpec {
            family: Family::GcFootnote,
            n: None,
        })
        .unwrap();
        assert_eq!(letter_image(&fn3, 0), vec![1, 0, 2]);
        assert_eq!(letter_image(&fn3, 1), vec![0, 2, 1]);

        assert!(build_family(&FamilySpec {
            family: Family::Fig3,
            n: Some(5),
        })
        .is_err());
    }

    #[test]
    fn size_constraints() {
        assert!(build(Family::F, 6).is_err());
        assert!(build(Family::F, 3).is_err());
        assert!(build(Family::K, 5).is_err());
        assert!(build(Family::K, 6).is_ok());
        assert!(build(Family::Cerny, 1).is_err());
        assert!(build(Family::L, 2).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!(Family::parse("cerny"), Some(Family::Cerny));
        assert_eq!(Family::parse("k"), Some(Family::K));
        assert_eq!(Family::parse("GC_FOOTNOTE"), Some(Family::GcFootnote));
        assert_eq!(Family::parse("nope"), None);
    }

    #[test]
    fn shared_cycle_letter() {
        for (family, n) in [
            (Family::Cerny, 6),
            (Family::L, 6),
            (Family::V, 6),
            (Family::F, 7),
            (Family::K, 7),
        ] {
            let a = build(family, n).unwrap();
            let b = a.letter_transformation(1);
            assert!(b.is_cyclic(), "{} should have a cyclic b", family.id());
            assert_eq!(
                a.letter_transformation(0).rank(),
                n - 1,
                "{} should have a rank n-1 a",
                family.id()
            );
        }
    }
}
