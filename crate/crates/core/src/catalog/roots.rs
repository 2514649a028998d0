//! Root decomposition relative to the listed Cartan elements.

use std::collections::BTreeMap;

use super::CatalogEntry;

/// Integer coordinates in the basis dual to the Cartan elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector {
    pub coeffs: Vec<i64>,
}

impl RootVector {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// e.g. "e1-e2", "2d1", "-e1+d2", "0".
    pub fn format(&self, labels: &[String]) -> String {
        let mut s = String::new();
        for (c, l) in self.coeffs.iter().zip(labels) {
            let c = *c;
            if c == 0 {
                continue;
            }
            if c < 0 {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            if c.abs() != 1 {
                s.push_str(&c.abs().to_string());
            }
            s.push_str(l);
        }
        if s.is_empty() {
            "0".into()
        } else {
            s
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootReport {
    pub labels: Vec<String>,
    /// Every basis element with its root.
    pub roots: Vec<(usize, RootVector)>,
    /// Basis elements that are not simultaneous eigenvectors.
    pub failures: Vec<String>,
}

impl RootReport {
    /// Root → basis elements, in basis order.
    pub fn spaces(&self) -> BTreeMap<RootVector, Vec<usize>> {
        let mut m: BTreeMap<RootVector, Vec<usize>> = BTreeMap::new();
        for (a, r) in &self.roots {
            m.entry(r.clone()).or_default().push(*a);
        }
        m
    }

    pub fn zero_root_elements(&self) -> Vec<usize> {
        self.roots.iter().filter(|(_, r)| r.is_zero()).map(|(a, _)| *a).collect()
    }
}

/// Reads off [h_k, X_a] = λ_k X_a for every Cartan element h_k.
pub fn extract_roots(entry: &CatalogEntry) -> RootReport {
    let alg = &entry.algebra;
    let mut roots = Vec::new();
    let mut failures = Vec::new();
    'basis: for a in 0..alg.dim() {
        let mut coeffs = Vec::with_capacity(entry.cartan.len());
        for &h in &entry.cartan {
            let br = alg.f(h, a);
            let lambda = match br.as_slice() {
                [] => 0,
                [(c, x)] if *c == a => match x.as_integer() {
                    Some(k) => k,
                    None => {
                        failures.push(format!("{}: non-integer eigenvalue {x}", alg.name(a)));
                        continue 'basis;
                    }
                },
                _ => {
                    failures.push(format!("{}: not an eigenvector of {}", alg.name(a), alg.name(h)));
                    continue 'basis;
                }
            };
            coeffs.push(lambda);
        }
        roots.push((a, RootVector { coeffs }));
    }
    RootReport {
        labels: entry.cartan_labels.clone(),
        roots,
        failures,
    }
}
