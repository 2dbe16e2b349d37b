//! Graded Betti numbers of Stanley-Reisner rings via the homological formula:
//! β_{i,j}(Δ) is the sum over all (i+j)-subsets W of dim H~_{j-1} of the induced
//! subcomplex on W. Derived invariants: regularity, projective dimension,
//! property N_{d,p}, Cohen-Macaulayness, pure-resolution ratio checks, and the
//! closed binomial forms for the two distinguished table shapes.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::homology_of_facets;
use crate::vset::k_subsets;
use num_bigint::{BigInt, BigUint};
use num_traits::{CheckedSub, One, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;

pub const HOCHSTER_MAX_VERTICES: usize = 22;

/// Sparse table of graded Betti numbers β_{i,j} of S(Δ).
///
/// Equality compares the entries only; the field is provenance metadata.
#[derive(Clone, Debug)]
pub struct BettiTable {
    field: FieldSpec,
    entries: BTreeMap<(usize, usize), u64>,
}

impl PartialEq for BettiTable {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for BettiTable {}

impl BettiTable {
    pub fn new(field: FieldSpec) -> Self {
        BettiTable {
            field,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(field: FieldSpec, entries: &[(usize, usize, u64)]) -> Self {
        let mut t = BettiTable::new(field);
        for &(i, j, b) in entries {
            t.add(i, j, b);
        }
        t
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn add(&mut self, i: usize, j: usize, count: u64) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    pub fn beta(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries sorted by (i, j).
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    /// One row of the table: β_{i,j} for i = 1..=pd at fixed j.
    pub fn row(&self, j: usize) -> Vec<u64> {
        let pd = self.projective_dimension();
        (1..=pd).map(|i| self.beta(i, j)).collect()
    }

    /// reg S(Δ): the largest internal degree with a nonzero entry.
    pub fn regularity(&self) -> usize {
        self.entries
            .iter()
            .filter(|(_, &b)| b > 0)
            .map(|(&(_, j), _)| j)
            .max()
            .unwrap_or(0)
    }

    /// reg I(Δ) = reg S(Δ) + 1, reported alongside for convenience.
    pub fn regularity_ideal(&self) -> usize {
        self.regularity() + 1
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries
            .iter()
            .filter(|(_, &b)| b > 0)
            .map(|(&(i, _), _)| i)
            .max()
            .unwrap_or(0)
    }

    /// Property N_{d,p}: β_{i,j} = 0 whenever i <= p and j >= d.
    pub fn satisfies_ndp(&self, d: usize, p: usize) -> bool {
        self.entries
            .iter()
            .all(|(&(i, j), &b)| b == 0 || i > p || j < d)
    }

    /// Total Betti number sum (sanity/bookkeeping).
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Paper-style rendering: rows are internal degrees j, columns homological
    /// degrees i, zeros printed as dots.
    pub fn render(&self) -> String {
        let pd = self.projective_dimension();
        let reg = self.regularity();
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut header = vec!["j\\i".to_string()];
        header.extend((0..=pd).map(|i| i.to_string()));
        cells.push(header);
        for j in 0..=reg {
            let mut row = vec![j.to_string()];
            for i in 0..=pd {
                let b = self.beta(i, j);
                row.push(if b == 0 { ".".to_string() } else { b.to_string() });
            }
            cells.push(row);
        }
        let ncols = pd + 2;
        let widths: Vec<usize> = (0..ncols)
            .map(|c| cells.iter().map(|r| r[c].len()).max().unwrap())
            .collect();
        let mut out = String::new();
        for row in &cells {
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    out.push_str("  ");
                }
                for _ in 0..widths[c].saturating_sub(cell.len()) {
                    out.push(' ');
                }
                out.push_str(cell);
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries()
            .map(|(i, j, b)| serde_json::json!([i, j, b]))
            .collect();
        serde_json::json!({
            "field": self.field.label(),
            "entries": entries,
        })
    }
}

impl std::fmt::Display for BettiTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Full Betti table of S(Δ) by the subset-sum formula; β_{0,0} = 1 by convention.
pub fn betti_table_hochster(c: &SimplicialComplex, field: &FieldSpec) -> Result<BettiTable> {
    betti_table_hochster_with_progress(c, field, |_, _| {})
}

/// Same sweep ordered by subset size, reporting the partial table after each size.
pub fn betti_table_hochster_with_progress(
    c: &SimplicialComplex,
    field: &FieldSpec,
    mut on_size: impl FnMut(usize, &BettiTable),
) -> Result<BettiTable> {
    let n = c.n();
    if n > HOCHSTER_MAX_VERTICES {
        return Err(Error::Infeasible {
            what: "subset sweep infeasible",
            n,
            max: HOCHSTER_MAX_VERTICES,
        });
    }
    let mut table = BettiTable::new(*field);
    table.add(0, 0, 1);
    for size in 1..=n {
        let masks: Vec<_> = k_subsets(n, size).collect();
        let contribs: Vec<(usize, usize, u64)> = masks
            .par_iter()
            .flat_map_iter(|&w| {
                let facets = c.induced_facets(w);
                let dims = homology_of_facets(&facets, field);
                dims.into_iter()
                    .enumerate()
                    .filter(|&(_, d)| d > 0)
                    .map(move |(j, d)| (size - j, j, d as u64))
                    .collect::<Vec<_>>()
            })
            .collect();
        for (i, j, d) in contribs {
            table.add(i, j, d);
        }
        on_size(size, &table);
    }
    Ok(table)
}

/// pd S(Δ) = codim Δ?
pub fn is_cohen_macaulay(c: &SimplicialComplex, field: &FieldSpec) -> Result<bool> {
    let bt = betti_table_hochster(c, field)?;
    Ok(bt.projective_dimension() == c.codimension())
}

/// Pure-resolution ratio test: with total degrees d_i = i + j_i the table is
/// Cohen-Macaulay iff β_i |∏_{k≠0,i}(d_k - d_i)| = β_0 |∏_{k≠0,i}(d_k - d_0)|
/// for every i. Errors when the table is not pure.
pub fn herzog_kuhl_check(bt: &BettiTable) -> Result<bool> {
    let pd = bt.projective_dimension();
    let mut degs: Vec<usize> = Vec::with_capacity(pd + 1);
    for i in 0..=pd {
        let js: Vec<usize> = bt
            .entries()
            .filter(|&(a, _, b)| a == i && b > 0)
            .map(|(_, j, _)| j)
            .collect();
        if js.len() != 1 {
            return Err(Error::NotPure);
        }
        degs.push(js[0]);
    }
    let d: Vec<i64> = degs.iter().enumerate().map(|(i, &j)| (i + j) as i64).collect();
    for i in 0..=pd {
        for k in 0..i {
            if d[k] >= d[i] {
                return Err(Error::NotPure);
            }
        }
    }
    let beta0 = BigInt::from(bt.beta(0, degs[0]));
    for i in 1..=pd {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for k in 0..=pd {
            if k == 0 || k == i {
                continue;
            }
            num *= BigInt::from((d[k] - d[0]).abs());
            den *= BigInt::from((d[k] - d[i]).abs());
        }
        let lhs = BigInt::from(bt.beta(i, degs[i])) * den;
        let rhs = beta0.clone() * num;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// β_{p,q} of the minimal (two-row) table shape: C(p+q-1, q) C(c+q, p+q).
pub fn closed_form_betti_minimal(c: usize, q: usize, p: usize) -> Result<BigUint> {
    if q == 0 || p == 0 || p > c {
        return Err(Error::Invalid(format!(
            "minimal closed form needs 1 <= p <= c, got p = {}, c = {}",
            p, c
        )));
    }
    Ok(binomial(p + q - 1, q) * binomial(c + q, p + q))
}

/// β_{p,q} of the del Pezzo table shape:
/// C(p+q-1, q) C(c+q, p+q) - C(c+q-p-1, q-1) C(c+q-1, c+q-p).
pub fn closed_form_betti_delpezzo(c: usize, q: usize, p: usize) -> Result<BigUint> {
    if q == 0 || p == 0 || p >= c {
        return Err(Error::Invalid(format!(
            "del Pezzo closed form needs 0 < p < c, got p = {}, c = {}",
            p, c
        )));
    }
    let a = binomial(p + q - 1, q) * binomial(c + q, p + q);
    let b = binomial(c + q - p - 1, q - 1) * binomial(c + q - 1, c + q - p);
    a.checked_sub(&b)
        .ok_or_else(|| Error::Invalid("del Pezzo closed form went negative".to_string()))
}

fn to_u64(b: &BigUint) -> u64 {
    u64::try_from(b).expect("desk-scale Betti numbers fit in u64")
}

/// The full two-row table with β_{0,0} = 1 and row q given by the minimal form.
pub fn minimal_shape_table(c: usize, q: usize, field: FieldSpec) -> BettiTable {
    let mut t = BettiTable::new(field);
    t.add(0, 0, 1);
    for p in 1..=c {
        t.add(p, q, to_u64(&closed_form_betti_minimal(c, q, p).unwrap()));
    }
    t
}

/// The del Pezzo table: rows 0 and q plus the corner β_{c,2q} = 1.
pub fn delpezzo_shape_table(c: usize, q: usize, field: FieldSpec) -> BettiTable {
    let mut t = BettiTable::new(field);
    t.add(0, 0, 1);
    for p in 1..c {
        t.add(p, q, to_u64(&closed_form_betti_delpezzo(c, q, p).unwrap()));
    }
    t.add(c, 2 * q, 1);
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::secant::secant_of_graph;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn table_of(g: &Graph, sq: usize) -> BettiTable {
        betti_table_hochster(&secant_of_graph(g, sq).unwrap(), &q()).unwrap()
    }

    #[test]
    fn c4_clique_complex_table() {
        let bt = table_of(&Graph::cycle(4).unwrap(), 1);
        assert_eq!(bt.beta(0, 0), 1);
        assert_eq!(bt.beta(1, 1), 2);
        assert_eq!(bt.beta(2, 2), 1);
        assert_eq!(bt.total(), 4);
        assert_eq!(bt.regularity(), 2);
        assert_eq!(bt.projective_dimension(), 2);
    }

    #[test]
    fn simplex_table_is_trivial() {
        let bt = betti_table_hochster(&SimplicialComplex::simplex(5), &q()).unwrap();
        assert_eq!(bt.total(), 1);
        assert_eq!(bt.beta(0, 0), 1);
        assert_eq!(bt.regularity(), 0);
        assert_eq!(bt.projective_dimension(), 0);
        for d in 1..4 {
            for p in 0..6 {
                assert!(bt.satisfies_ndp(d, p));
            }
        }
        assert!(herzog_kuhl_check(&bt).unwrap());
    }

    #[test]
    fn hochster_vanishing_bounds() {
        let bt = table_of(&Graph::sunlet4(), 2);
        for (i, j, b) in bt.entries() {
            assert!(b == 0 || (i + j <= 8 && j <= 8));
        }
    }

    #[test]
    fn path_closed_form_small() {
        // P7 at q = 2: c = 3; the closed form gives 10, 15, 6
        let bt = table_of(&Graph::path(7).unwrap(), 2);
        assert_eq!(bt.row(2), vec![10, 15, 6]);
        let shape = minimal_shape_table(3, 2, q());
        assert_eq!(bt, shape);
        assert!(herzog_kuhl_check(&bt).unwrap());
    }

    #[test]
    fn delpezzo_closed_form_c7() {
        // C7 at q = 2: c = 3, middle entries 7, 7, corner at (3, 4)
        let bt = table_of(&Graph::cycle(7).unwrap(), 2);
        let shape = delpezzo_shape_table(3, 2, q());
        assert_eq!(bt, shape);
        assert_eq!(bt.beta(1, 2), 7);
        assert_eq!(bt.beta(2, 2), 7);
        assert_eq!(bt.beta(3, 4), 1);
        // Gorenstein symmetry of the middle row
        for p in 1..3 {
            assert_eq!(
                closed_form_betti_delpezzo(3, 2, p).unwrap(),
                closed_form_betti_delpezzo(3, 2, 3 - p).unwrap()
            );
        }
    }

    #[test]
    fn minimal_closed_form_edge_cases() {
        assert_eq!(
            closed_form_betti_minimal(1, 3, 1).unwrap(),
            BigUint::from(1u32)
        );
        assert!(closed_form_betti_minimal(3, 2, 0).is_err());
        assert!(closed_form_betti_minimal(3, 2, 4).is_err());
        assert!(closed_form_betti_delpezzo(3, 2, 3).is_err());
    }

    #[test]
    fn sunlet_sigma2_is_cohen_macaulay() {
        // dim σ2 = 3, so codim = 7 - 3 = 4, which matches pd from Table-of-20-45-36-10;
        // the pure-resolution ratios confirm it
        let sq = secant_of_graph(&Graph::sunlet4(), 2).unwrap();
        assert_eq!(sq.codimension(), 4);
        let bt = betti_table_hochster(&sq, &q()).unwrap();
        assert_eq!(bt.projective_dimension(), 4);
        assert!(is_cohen_macaulay(&sq, &q()).unwrap());
        assert!(herzog_kuhl_check(&bt).unwrap());
        // contracting a pendant edge keeps pd equal to the shrunken codim
        let spider = Graph::spider(3, 2).unwrap();
        let s2 = secant_of_graph(&spider, 2).unwrap();
        assert!(!is_cohen_macaulay(&s2, &q()).unwrap());
        assert!(is_cohen_macaulay(&SimplicialComplex::simplex(4), &q()).unwrap());
    }

    #[test]
    fn herzog_kuhl_rejects_impure() {
        // the clique complex of the 4-sunlet has rows 1 and 2 populated
        let bt = table_of(&Graph::sunlet4(), 1);
        assert!(matches!(herzog_kuhl_check(&bt), Err(Error::NotPure)));
    }

    #[test]
    fn ndp_reading() {
        let bt = BettiTable::from_entries(q(), &[(0, 0, 1), (1, 2, 5), (2, 4, 1)]);
        assert!(bt.satisfies_ndp(3, 1));
        assert!(!bt.satisfies_ndp(3, 2));
        assert!(!bt.satisfies_ndp(2, 1));
    }

    #[test]
    fn render_shape() {
        let bt = BettiTable::from_entries(q(), &[(0, 0, 1), (1, 2, 20), (2, 2, 45)]);
        let s = bt.render();
        assert!(s.contains("j\\i"));
        assert!(s.contains("20"));
        assert!(s.lines().count() == 4); // header + rows j = 0, 1, 2
    }

    #[test]
    fn json_shape() {
        let bt = BettiTable::from_entries(q(), &[(0, 0, 1), (1, 1, 2)]);
        let v = bt.to_json();
        assert_eq!(v["field"], "Q");
        assert_eq!(v["entries"][0][2], 1);
    }
}
