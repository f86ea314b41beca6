//! Certificate verification.
//!
//! A certificate is a concrete finite object claimed to witness one of the
//! existence statements the toolkit handles. Verification is exact search,
//! shares the detectors of [`crate::graph`] and [`crate::setsystem`], and on
//! failure names the first violated constraint (first in the fixed scan
//! order, so reports are reproducible).

use crate::error::Result;
use crate::graph::{find_anticlique, find_clique, find_monochromatic_clique, find_monochromatic_hyperclique};
use crate::graph::{EdgeColoring, Graph, SubsetColoring};
use crate::setsystem::{delta, SetSystem, SignColoring};

/// A claimed witness plus the parameters of the claim it witnesses.
#[derive(Debug, Clone)]
pub enum Certificate {
    /// `graph` contains no `n`-clique and no `n`-anticlique.
    RamseyGraph { n: usize, graph: Graph },
    /// `coloring` contains no monochromatic `n`-clique.
    MulticolorClique { n: usize, coloring: EdgeColoring },
    /// `coloring` contains no monochromatic hyperclique on `n` elements.
    Hyperclique { n: usize, coloring: SubsetColoring },
    /// every member set of `system` has |Δ(coloring)| < a (strict).
    Discrepancy { a: u64, system: SetSystem, coloring: SignColoring },
}

/// Verdict of a certificate check. `reason` names the first violated
/// constraint on failure and summarizes what was checked on success.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub ok: bool,
    pub reason: String,
}

impl Verification {
    fn pass(reason: String) -> Verification {
        Verification { ok: true, reason }
    }

    fn fail(reason: String) -> Verification {
        Verification { ok: false, reason }
    }
}

fn fmt_set(set: &[usize]) -> String {
    let inner: Vec<String> = set.iter().map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

/// Checks a certificate exactly. Errors only on malformed input (for the
/// discrepancy kind, a coloring over the wrong universe; for the hyperclique
/// kind, `n` below the subset size); a violated claim is a `false` verdict,
/// not an error.
pub fn verify_certificate(cert: &Certificate) -> Result<Verification> {
    match cert {
        Certificate::RamseyGraph { n, graph } => {
            if let Some(set) = find_clique(graph, *n) {
                return Ok(Verification::fail(format!("contains a {}-clique {}", n, fmt_set(&set))));
            }
            if let Some(set) = find_anticlique(graph, *n) {
                return Ok(Verification::fail(format!("contains a {}-anticlique {}", n, fmt_set(&set))));
            }
            Ok(Verification::pass(format!(
                "no {}-clique and no {}-anticlique among {} vertices",
                n,
                n,
                graph.r()
            )))
        }
        Certificate::MulticolorClique { n, coloring } => {
            if let Some((q, set)) = find_monochromatic_clique(coloring, *n) {
                return Ok(Verification::fail(format!(
                    "color {} contains a {}-clique {}",
                    q + 1,
                    n,
                    fmt_set(&set)
                )));
            }
            Ok(Verification::pass(format!(
                "no monochromatic {}-clique in any of {} colors on {} vertices",
                n,
                coloring.k(),
                coloring.r()
            )))
        }
        Certificate::Hyperclique { n, coloring } => {
            if let Some((q, set)) = find_monochromatic_hyperclique(coloring, *n)? {
                return Ok(Verification::fail(format!(
                    "color {} is constant on all {}-subsets of {}",
                    q + 1,
                    coloring.l(),
                    fmt_set(&set)
                )));
            }
            Ok(Verification::pass(format!(
                "no {}-set with monochromatic {}-subsets in any of {} colors",
                n,
                coloring.l(),
                coloring.k()
            )))
        }
        Certificate::Discrepancy { a, system, coloring } => {
            for (idx, m) in system.sets().iter().enumerate() {
                let d = delta(m, coloring)?;
                if d.unsigned_abs() >= *a {
                    return Ok(Verification::fail(format!(
                        "set M_{} has |delta| = {} >= a = {}",
                        idx + 1,
                        d.unsigned_abs(),
                        a
                    )));
                }
            }
            Ok(Verification::pass(format!(
                "all {} sets have |delta| < {}",
                system.s(),
                a
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setsystem::Subset;

    fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap()
    }

    #[test]
    fn c5_is_a_valid_ramsey_certificate_for_n_3() {
        let v = verify_certificate(&Certificate::RamseyGraph { n: 3, graph: c5() }).unwrap();
        assert!(v.ok, "{}", v.reason);
    }

    #[test]
    fn c5_fails_for_n_2_naming_the_first_clique() {
        let v = verify_certificate(&Certificate::RamseyGraph { n: 2, graph: c5() }).unwrap();
        assert!(!v.ok);
        assert_eq!(v.reason, "contains a 2-clique {1, 2}");
    }

    #[test]
    fn anticlique_violation_is_reported_when_no_clique_exists() {
        let g = Graph::empty(3);
        let v = verify_certificate(&Certificate::RamseyGraph { n: 3, graph: g }).unwrap();
        assert!(!v.ok);
        assert_eq!(v.reason, "contains a 3-anticlique {1, 2, 3}");
    }

    #[test]
    fn multicolor_certificate_on_k5_two_cycles() {
        let g = c5();
        let coloring = EdgeColoring::from_fn(5, 2, |i, j| if g.has_edge(i, j) { 0 } else { 1 });
        let v = verify_certificate(&Certificate::MulticolorClique { n: 3, coloring: coloring.clone() }).unwrap();
        assert!(v.ok, "{}", v.reason);
        let v2 = verify_certificate(&Certificate::MulticolorClique { n: 2, coloring }).unwrap();
        assert!(!v2.ok);
        assert_eq!(v2.reason, "color 1 contains a 2-clique {1, 2}");
    }

    #[test]
    fn hyperclique_certificate_parity_coloring() {
        let coloring = SubsetColoring::from_fn(5, 3, 2, |s| {
            (s.iter().map(|&v| v + 1).sum::<usize>() % 2) as u32
        })
        .unwrap();
        let v = verify_certificate(&Certificate::Hyperclique { n: 4, coloring: coloring.clone() }).unwrap();
        assert!(v.ok, "{}", v.reason);

        let constant = SubsetColoring::from_fn(5, 3, 2, |_| 1).unwrap();
        let v2 = verify_certificate(&Certificate::Hyperclique { n: 4, coloring: constant }).unwrap();
        assert!(!v2.ok);
        assert_eq!(v2.reason, "color 2 is constant on all 3-subsets of {1, 2, 3, 4}");

        // n below l is malformed input, not a failed verdict
        assert!(verify_certificate(&Certificate::Hyperclique { n: 2, coloring }).is_err());
    }

    #[test]
    fn discrepancy_certificate_strictness() {
        let m1 = Subset::from_elements(4, &[0, 1]).unwrap();
        let m2 = Subset::from_elements(4, &[1, 2, 3]).unwrap();
        let system = SetSystem::new(4, vec![m1, m2]).unwrap();
        let coloring = SignColoring::from_signs(vec![1, -1, 1, -1]).unwrap();

        // |delta| values are 0 and 1: a = 2 passes, a = 1 fails on M_2
        let pass = verify_certificate(&Certificate::Discrepancy {
            a: 2,
            system: system.clone(),
            coloring: coloring.clone(),
        })
        .unwrap();
        assert!(pass.ok, "{}", pass.reason);

        let fail = verify_certificate(&Certificate::Discrepancy { a: 1, system: system.clone(), coloring }).unwrap();
        assert!(!fail.ok);
        assert_eq!(fail.reason, "set M_2 has |delta| = 1 >= a = 1");

        // mismatched universe is an input error
        let short = SignColoring::all_plus(3);
        assert!(verify_certificate(&Certificate::Discrepancy { a: 1, system, coloring: short }).is_err());
    }
}
