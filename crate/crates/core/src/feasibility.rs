//! Exact-rational linear feasibility with replayable certificates.
//!
//! A [`FeasibilitySystem`] is a list of equality and `>= 0` constraints
//! over named unknowns, each carrying a provenance tag. [`decide`] first
//! substitutes the equalities away, then runs Fourier–Motzkin elimination
//! over the rationals with duplicate and dominated rows pruned after every
//! step, choosing the variable with the fewest product pairs first.
//!
//! The outcome is never wrong: an infeasible verdict carries a
//! non-negative combination of the original constraints adding up to a
//! contradiction, a feasible verdict carries a rational assignment, and
//! `undecided` appears only when the row budget is exhausted. Both kinds
//! of evidence re-validate against the original system via
//! [`Certificate::validate`], independently of the elimination order.

use std::fmt;
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Where a constraint came from; carried into certificates and reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// Non-negativity of the k'th MacWilliams transform entry.
    MacWilliamsRow(usize),
    /// Mirror equality `a_i = a_{m-i}` of a complement-closed code.
    Antipodality(usize),
    /// Lower bound or divisibility fact from a weight-class design.
    DesignDivisibility(String),
    /// Cardinality bookkeeping.
    Cardinality(String),
    /// `a_i = 0` forced by the minimum distance or a maximum weight.
    WeightSupport(usize),
    /// `a_i >= 0`.
    Nonnegativity(usize),
    /// A pinned value `a_i = c`.
    FixedValue(usize),
    /// Anything else.
    Given(String),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::MacWilliamsRow(k) => write!(f, "macwilliams k={k}"),
            Provenance::Antipodality(i) => write!(f, "antipodal i={i}"),
            Provenance::DesignDivisibility(text) => write!(f, "design {text}"),
            Provenance::Cardinality(text) => write!(f, "cardinality {text}"),
            Provenance::WeightSupport(i) => write!(f, "weight-support i={i}"),
            Provenance::Nonnegativity(i) => write!(f, "nonnegative i={i}"),
            Provenance::FixedValue(i) => write!(f, "fixed i={i}"),
            Provenance::Given(text) => write!(f, "given {text}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `constant + coeffs . x = 0`
    Eq,
    /// `constant + coeffs . x >= 0`
    Ge,
}

/// One linear constraint `constant + sum coeffs[v] * x_v (= | >=) 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub provenance: Provenance,
    pub relation: Relation,
    pub constant: BigRational,
    pub coeffs: Vec<BigRational>,
}

impl Constraint {
    /// Evaluates the left-hand side at an assignment.
    fn evaluate(&self, assignment: &[BigRational]) -> BigRational {
        let mut total = self.constant.clone();
        for (coeff, value) in self.coeffs.iter().zip(assignment) {
            total += coeff * value;
        }
        total
    }

    fn holds_at(&self, assignment: &[BigRational]) -> bool {
        let value = self.evaluate(assignment);
        match self.relation {
            Relation::Eq => value.is_zero(),
            Relation::Ge => !value.is_negative(),
        }
    }
}

/// Linear constraints over named unknowns.
#[derive(Debug, Clone)]
pub struct FeasibilitySystem {
    var_names: Vec<String>,
    constraints: Vec<Constraint>,
}

impl FeasibilitySystem {
    pub fn new(var_names: Vec<String>) -> Self {
        FeasibilitySystem {
            var_names,
            constraints: Vec::new(),
        }
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn push(
        &mut self,
        provenance: Provenance,
        relation: Relation,
        constant: BigRational,
        coeffs: Vec<BigRational>,
    ) {
        assert_eq!(coeffs.len(), self.var_names.len());
        self.constraints.push(Constraint {
            provenance,
            relation,
            constant,
            coeffs,
        });
    }

    /// The constraint with fixed-value equalities substituted in; used to
    /// display a row the way it would be printed after pinning the known
    /// entries.
    pub fn substituted(&self, index: usize) -> Constraint {
        let fixed = self.fixed_values();
        let mut row = self.constraints[index].clone();
        for (v, value) in fixed {
            let coeff = std::mem::replace(&mut row.coeffs[v], BigRational::zero());
            row.constant += coeff * value;
        }
        row
    }

    /// Values pinned by single-variable equality constraints.
    fn fixed_values(&self) -> Vec<(usize, BigRational)> {
        let mut fixed = Vec::new();
        for constraint in &self.constraints {
            if constraint.relation != Relation::Eq {
                continue;
            }
            let nonzero: Vec<usize> = (0..constraint.coeffs.len())
                .filter(|&v| !constraint.coeffs[v].is_zero())
                .collect();
            if let [v] = nonzero[..] {
                fixed.push((v, -constraint.constant.clone() / &constraint.coeffs[v]));
            }
        }
        fixed
    }

    /// Renders a constraint as text, constant first, variables in index
    /// order.
    pub fn render_constraint(&self, constraint: &Constraint) -> String {
        let mut out = String::new();
        let mut first = true;
        if !constraint.constant.is_zero() {
            write!(out, "{}", constraint.constant).unwrap();
            first = false;
        }
        for (v, coeff) in constraint.coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            if first {
                if coeff == &BigRational::one() {
                    write!(out, "{}", self.var_names[v]).unwrap();
                } else if coeff == &-BigRational::one() {
                    write!(out, "-{}", self.var_names[v]).unwrap();
                } else {
                    write!(out, "{}*{}", coeff, self.var_names[v]).unwrap();
                }
                first = false;
            } else if coeff.is_negative() {
                if coeff == &-BigRational::one() {
                    write!(out, " - {}", self.var_names[v]).unwrap();
                } else {
                    write!(out, " - {}*{}", -coeff, self.var_names[v]).unwrap();
                }
            } else if coeff == &BigRational::one() {
                write!(out, " + {}", self.var_names[v]).unwrap();
            } else {
                write!(out, " + {}*{}", coeff, self.var_names[v]).unwrap();
            }
        }
        if first {
            out.push('0');
        }
        match constraint.relation {
            Relation::Eq => out.push_str(" = 0"),
            Relation::Ge => out.push_str(" >= 0"),
        }
        out
    }

    /// Stable text dump of the whole system.
    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "vars: {}", self.var_names.join(" ")).unwrap();
        for (i, constraint) in self.constraints.iter().enumerate() {
            writeln!(
                out,
                "c{i} [{}]: {}",
                constraint.provenance,
                self.render_constraint(constraint)
            )
            .unwrap();
        }
        out
    }
}

/// Decision outcome.
#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Infeasible,
    /// A satisfying assignment, indexed like the system variables.
    Feasible(Vec<BigRational>),
    /// Budget exhausted before a decision.
    Undecided(String),
}

/// A decision together with its replayable evidence.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub verdict: Verdict,
    /// For an infeasible verdict: multipliers over original constraints
    /// whose combination is a contradiction. Multipliers on `>=`
    /// constraints are non-negative; equality multipliers are
    /// unrestricted.
    pub trail: Vec<(usize, BigRational)>,
}

impl Certificate {
    pub fn is_infeasible(&self) -> bool {
        matches!(self.verdict, Verdict::Infeasible)
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self.verdict, Verdict::Feasible(_))
    }

    /// Re-checks the evidence against the system it was produced for.
    pub fn validate(&self, system: &FeasibilitySystem) -> bool {
        match &self.verdict {
            Verdict::Feasible(witness) => {
                witness.len() == system.var_names.len()
                    && system.constraints.iter().all(|c| c.holds_at(witness))
            }
            Verdict::Infeasible => {
                let n = system.var_names.len();
                let mut constant = BigRational::zero();
                let mut coeffs = vec![BigRational::zero(); n];
                let mut has_ge = false;
                for (index, multiplier) in &self.trail {
                    let Some(constraint) = system.constraints.get(*index) else {
                        return false;
                    };
                    match constraint.relation {
                        Relation::Ge => {
                            if multiplier.is_negative() {
                                return false;
                            }
                            if multiplier.is_positive() {
                                has_ge = true;
                            }
                        }
                        Relation::Eq => {}
                    }
                    constant += multiplier * &constraint.constant;
                    for (slot, coeff) in coeffs.iter_mut().zip(&constraint.coeffs) {
                        *slot += multiplier * coeff;
                    }
                }
                let zero_coeffs = coeffs.iter().all(BigRational::is_zero);
                zero_coeffs
                    && if has_ge {
                        constant.is_negative()
                    } else {
                        !constant.is_zero()
                    }
            }
            Verdict::Undecided(_) => true,
        }
    }

    /// Stable text rendering: verdict, then the trail or witness.
    pub fn render(&self, system: &FeasibilitySystem) -> String {
        let mut out = String::new();
        match &self.verdict {
            Verdict::Infeasible => {
                writeln!(out, "verdict: infeasible").unwrap();
                let mut constant = BigRational::zero();
                for (index, multiplier) in &self.trail {
                    let constraint = &system.constraints[*index];
                    constant += multiplier * &constraint.constant;
                    writeln!(
                        out,
                        "  {} * c{index} [{}]: {}",
                        multiplier,
                        constraint.provenance,
                        system.render_constraint(constraint)
                    )
                    .unwrap();
                }
                writeln!(out, "  combination: {constant} >= 0, a contradiction").unwrap();
            }
            Verdict::Feasible(witness) => {
                writeln!(out, "verdict: feasible").unwrap();
                for (name, value) in system.var_names.iter().zip(witness) {
                    writeln!(out, "  {name} = {value}").unwrap();
                }
            }
            Verdict::Undecided(reason) => {
                writeln!(out, "verdict: undecided ({reason})").unwrap();
            }
        }
        out
    }
}

const MAX_FREE_VARS: usize = 12;
const MAX_ROWS: usize = 100_000;

/// Removes duplicate, dominated and vacuous rows.
///
/// Duplicates keep the strongest constant. The other two prunes lean on
/// the non-negativity substrate: a variable `v` is *supported* when the
/// set holds a row of the exact shape `x_v + c >= 0` with `c <= 0`, which
/// implies `x_v >= 0`. A row whose coefficients and constant are all
/// non-negative, with every positive coefficient on a supported variable,
/// is implied by the substrate and dropped; a row that exceeds a kept row
/// componentwise, with the excess only on supported variables, is
/// likewise implied and dropped.
fn prune_rows(rows: &mut Vec<Row>, n: usize) {
    rows.sort_by(|a, b| a.coeffs.cmp(&b.coeffs).then(a.constant.cmp(&b.constant)));
    rows.dedup_by(|next, kept| kept.coeffs == next.coeffs);
    // Substrate rows are the single-variable bounds `x_v + c >= 0` with
    // `c <= 0`; they witness `x_v >= 0` and both prunes below lean on
    // them, so they are never removal candidates themselves (dedup above
    // only ever replaces one by a stronger row of the same shape).
    let is_substrate = |row: &Row| {
        if row.constant.is_positive() {
            return false;
        }
        let nonzero: Vec<usize> = (0..n).filter(|&v| !row.coeffs[v].is_zero()).collect();
        matches!(nonzero[..], [v] if row.coeffs[v].is_positive())
    };
    let mut supported = vec![false; n];
    for row in rows.iter().filter(|row| is_substrate(row)) {
        let v = (0..n).find(|&v| !row.coeffs[v].is_zero()).expect("substrate");
        supported[v] = true;
    }
    // Trivially true constant rows carry no information.
    rows.retain(|row| !(row.is_constant() && !row.constant.is_negative()));
    let vacuous = |row: &Row| {
        !is_substrate(row)
            && !row.constant.is_negative()
            && (0..n).all(|v| {
                row.coeffs[v].is_zero() || (row.coeffs[v].is_positive() && supported[v])
            })
    };
    rows.retain(|row| !vacuous(row));
    let mut kept: Vec<Row> = Vec::with_capacity(rows.len());
    'candidates: for row in rows.drain(..) {
        if !is_substrate(&row) {
            for other in &kept {
                let dominated = other.constant <= row.constant
                    && (0..n).all(|v| {
                        other.coeffs[v] == row.coeffs[v]
                            || (other.coeffs[v] < row.coeffs[v] && supported[v])
                    });
                if dominated {
                    continue 'candidates;
                }
            }
        }
        kept.push(row);
    }
    *rows = kept;
}

#[derive(Clone)]
struct Row {
    constant: BigRational,
    coeffs: Vec<BigRational>,
    combo: Vec<(usize, BigRational)>,
}

impl Row {
    fn from_constraint(index: usize, constraint: &Constraint) -> Row {
        Row {
            constant: constraint.constant.clone(),
            coeffs: constraint.coeffs.clone(),
            combo: vec![(index, BigRational::one())],
        }
    }

    fn add_multiple(&mut self, other: &Row, factor: &BigRational) {
        if factor.is_zero() {
            return;
        }
        self.constant += factor * &other.constant;
        for (slot, coeff) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *slot += factor * coeff;
        }
        for (index, multiplier) in &other.combo {
            match self.combo.iter_mut().find(|(i, _)| i == index) {
                Some((_, existing)) => *existing += factor * multiplier,
                None => self.combo.push((*index, factor * multiplier)),
            }
        }
        self.combo.retain(|(_, m)| !m.is_zero());
    }

    fn scale(&mut self, factor: &BigRational) {
        self.constant *= factor;
        for coeff in self.coeffs.iter_mut() {
            *coeff *= factor;
        }
        for (_, multiplier) in self.combo.iter_mut() {
            *multiplier *= factor;
        }
    }

    /// Scales so coefficients form a primitive integer vector (positive
    /// scaling only, so `>=` is preserved).
    fn normalize(&mut self) {
        use num_bigint::BigInt;
        use num_integer::Integer;
        let mut lcm = BigInt::one();
        for value in self.coeffs.iter().chain(std::iter::once(&self.constant)) {
            lcm = lcm.lcm(value.denom());
        }
        let mut gcd = BigInt::zero();
        for value in self.coeffs.iter() {
            gcd = gcd.gcd(&(value.numer() * &lcm / value.denom()));
        }
        if gcd.is_zero() {
            // Pure constant row; scale the constant to -1, 0 or 1.
            if !self.constant.is_zero() {
                let factor = (BigRational::one() / self.constant.clone()).abs();
                self.scale(&factor);
            }
            return;
        }
        let factor = BigRational::new(lcm, gcd);
        self.scale(&factor);
    }

    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_zero)
    }
}

/// Decides a feasibility system by equality substitution followed by
/// Fourier–Motzkin elimination.
pub fn decide(system: &FeasibilitySystem) -> Result<Certificate> {
    let n = system.var_names.len();
    let mut equalities = Vec::new();
    let mut rows = Vec::new();
    for (index, constraint) in system.constraints.iter().enumerate() {
        let row = Row::from_constraint(index, constraint);
        match constraint.relation {
            Relation::Eq => equalities.push(row),
            Relation::Ge => rows.push(row),
        }
    }

    // Equality substitution; remembers (pivot var, solved row) pairs for
    // witness reconstruction.
    let mut substitutions: Vec<(usize, Row)> = Vec::new();
    while let Some(mut eq) = equalities.pop() {
        let pivot = (0..n).find(|&v| !eq.coeffs[v].is_zero());
        let Some(pivot) = pivot else {
            if eq.constant.is_zero() {
                continue;
            }
            let certificate = Certificate {
                verdict: Verdict::Infeasible,
                trail: eq.combo,
            };
            assert!(certificate.validate(system), "invalid contradiction trail");
            return Ok(certificate);
        };
        let inv = BigRational::one() / eq.coeffs[pivot].clone();
        eq.scale(&inv);
        for other in equalities.iter_mut().chain(rows.iter_mut()) {
            let factor = -other.coeffs[pivot].clone();
            other.add_multiple(&eq, &factor);
        }
        substitutions.push((pivot, eq));
    }

    let free_vars: Vec<usize> = (0..n)
        .filter(|&v| rows.iter().any(|row| !row.coeffs[v].is_zero()))
        .collect();
    if free_vars.len() > MAX_FREE_VARS {
        return Err(Error::resource(format!(
            "{} free unknowns after equality substitution (limit {MAX_FREE_VARS})",
            free_vars.len()
        )));
    }

    // Fourier–Motzkin elimination, fewest product pairs first, with
    // duplicate, dominated and vacuous rows pruned after every step.
    let mut eliminations: Vec<(usize, Vec<Row>)> = Vec::new();
    loop {
        for row in rows.iter_mut() {
            row.normalize();
        }
        if let Some(row) = rows
            .iter()
            .find(|row| row.is_constant() && row.constant.is_negative())
        {
            let certificate = Certificate {
                verdict: Verdict::Infeasible,
                trail: row.combo.clone(),
            };
            assert!(certificate.validate(system), "invalid contradiction trail");
            return Ok(certificate);
        }
        prune_rows(&mut rows, n);
        let candidates: Vec<usize> = (0..n)
            .filter(|&v| rows.iter().any(|row| !row.coeffs[v].is_zero()))
            .collect();
        let Some(&var) = candidates.iter().min_by_key(|&&v| {
            let pos = rows.iter().filter(|r| r.coeffs[v].is_positive()).count();
            let neg = rows.iter().filter(|r| r.coeffs[v].is_negative()).count();
            (pos * neg, v)
        }) else {
            break;
        };
        let (with_var, carried): (Vec<Row>, Vec<Row>) =
            rows.into_iter().partition(|row| !row.coeffs[var].is_zero());
        let mut next = carried;
        for lower in with_var.iter().filter(|r| r.coeffs[var].is_positive()) {
            for upper in with_var.iter().filter(|r| r.coeffs[var].is_negative()) {
                // (-upper_coeff) * lower + lower_coeff * upper has no var
                // and non-negative multipliers.
                let mut combined = lower.clone();
                combined.scale(&-upper.coeffs[var].clone());
                combined.add_multiple(upper, &lower.coeffs[var].clone());
                debug_assert!(combined.coeffs[var].is_zero());
                if combined.is_constant() && combined.constant.is_negative() {
                    let certificate = Certificate {
                        verdict: Verdict::Infeasible,
                        trail: combined.combo,
                    };
                    assert!(certificate.validate(system), "invalid contradiction trail");
                    return Ok(certificate);
                }
                next.push(combined);
                if next.len() > MAX_ROWS {
                    return Ok(Certificate {
                        verdict: Verdict::Undecided(format!(
                            "row budget {MAX_ROWS} exhausted while eliminating {}",
                            system.var_names[var]
                        )),
                        trail: Vec::new(),
                    });
                }
            }
        }
        eliminations.push((var, with_var));
        rows = next;
    }

    // Only constant rows remain.
    for row in &rows {
        debug_assert!(row.is_constant());
        if row.constant.is_negative() {
            let certificate = Certificate {
                verdict: Verdict::Infeasible,
                trail: row.combo.clone(),
            };
            assert!(certificate.validate(system), "invalid contradiction trail");
            return Ok(certificate);
        }
    }

    // Feasible: rebuild a witness, eliminated variables in reverse order,
    // then the equality substitutions in reverse.
    let mut witness = vec![BigRational::zero(); n];
    for (var, bounds) in eliminations.iter().rev() {
        let mut lower: Option<BigRational> = None;
        let mut upper: Option<BigRational> = None;
        for row in bounds {
            let coeff = &row.coeffs[*var];
            let mut rest = row.constant.clone();
            for (v, c) in row.coeffs.iter().enumerate() {
                if v != *var && !c.is_zero() {
                    rest += c * &witness[v];
                }
            }
            let bound = -rest / coeff;
            if coeff.is_positive() {
                lower = Some(match lower {
                    Some(current) => current.max(bound),
                    None => bound,
                });
            } else {
                upper = Some(match upper {
                    Some(current) => current.min(bound),
                    None => bound,
                });
            }
        }
        witness[*var] = match (lower, upper) {
            (Some(low), Some(high)) => {
                debug_assert!(low <= high);
                low
            }
            (Some(low), None) => low,
            (None, Some(high)) => high.min(BigRational::zero()),
            (None, None) => BigRational::zero(),
        };
    }
    for (var, eq) in substitutions.iter().rev() {
        let mut value = -eq.constant.clone();
        for (v, coeff) in eq.coeffs.iter().enumerate() {
            if v != *var && !coeff.is_zero() {
                value -= coeff * &witness[v];
            }
        }
        witness[*var] = value;
    }
    let certificate = Certificate {
        verdict: Verdict::Feasible(witness),
        trail: Vec::new(),
    };
    assert!(certificate.validate(system), "witness fails re-substitution");
    Ok(certificate)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn system(vars: &[&str]) -> FeasibilitySystem {
        FeasibilitySystem::new(vars.iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn contradictory_pair_is_infeasible_with_trail() {
        // x >= 1 and -x >= 0.
        let mut s = system(&["x"]);
        s.push(Provenance::Given("x >= 1".into()), Relation::Ge, rat(-1), vec![rat(1)]);
        s.push(Provenance::Given("-x >= 0".into()), Relation::Ge, rat(0), vec![rat(-1)]);
        let certificate = decide(&s).unwrap();
        assert!(certificate.is_infeasible());
        assert!(certificate.validate(&s));
        assert_eq!(certificate.trail.len(), 2);
    }

    #[test]
    fn single_nonnegativity_is_feasible() {
        let mut s = system(&["a_6"]);
        s.push(Provenance::Nonnegativity(6), Relation::Ge, rat(0), vec![rat(1)]);
        let certificate = decide(&s).unwrap();
        match &certificate.verdict {
            Verdict::Feasible(witness) => assert!(!witness[0].is_negative()),
            other => panic!("expected feasible, got {other:?}"),
        }
        assert!(certificate.validate(&s));
    }

    #[test]
    fn equalities_substitute_before_elimination() {
        // x = 3, y >= x, -y >= -2 is infeasible (3 <= y <= 2).
        let mut s = system(&["x", "y"]);
        s.push(Provenance::FixedValue(0), Relation::Eq, rat(-3), vec![rat(1), rat(0)]);
        s.push(Provenance::Given("y >= x".into()), Relation::Ge, rat(0), vec![rat(-1), rat(1)]);
        s.push(Provenance::Given("y <= 2".into()), Relation::Ge, rat(2), vec![rat(0), rat(-1)]);
        let certificate = decide(&s).unwrap();
        assert!(certificate.is_infeasible());
        assert!(certificate.validate(&s));
    }

    #[test]
    fn inconsistent_equalities_are_detected() {
        let mut s = system(&["x"]);
        s.push(Provenance::FixedValue(0), Relation::Eq, rat(-1), vec![rat(1)]);
        s.push(Provenance::FixedValue(0), Relation::Eq, rat(-2), vec![rat(1)]);
        let certificate = decide(&s).unwrap();
        assert!(certificate.is_infeasible());
        assert!(certificate.validate(&s));
    }

    #[test]
    fn witness_respects_two_sided_bounds() {
        // 1 <= x <= 2, y = 2x.
        let mut s = system(&["x", "y"]);
        s.push(Provenance::Given("x >= 1".into()), Relation::Ge, rat(-1), vec![rat(1), rat(0)]);
        s.push(Provenance::Given("x <= 2".into()), Relation::Ge, rat(2), vec![rat(-1), rat(0)]);
        s.push(
            Provenance::Given("y = 2x".into()),
            Relation::Eq,
            rat(0),
            vec![rat(2), rat(-1)],
        );
        let certificate = decide(&s).unwrap();
        assert!(certificate.validate(&s));
        match &certificate.verdict {
            Verdict::Feasible(witness) => {
                assert_eq!(&witness[1], &(rat(2) * &witness[0]));
            }
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn verdicts_are_order_insensitive() {
        let base: Vec<(i64, Vec<i64>)> = vec![
            (-10, vec![1, 1, 0]),
            (4, vec![-1, 0, 1]),
            (6, vec![0, -1, -1]),
            (0, vec![1, 0, 0]),
            (0, vec![0, 1, 0]),
            (0, vec![0, 0, 1]),
        ];
        let build = |order: &[usize]| {
            let mut s = system(&["x", "y", "z"]);
            for &i in order {
                let (constant, coeffs) = &base[i];
                s.push(
                    Provenance::Given(format!("row {i}")),
                    Relation::Ge,
                    rat(*constant),
                    coeffs.iter().map(|&c| rat(c)).collect(),
                );
            }
            s
        };
        let orders: Vec<Vec<usize>> = vec![
            vec![0, 1, 2, 3, 4, 5],
            vec![5, 4, 3, 2, 1, 0],
            vec![2, 0, 4, 1, 5, 3],
            vec![3, 5, 0, 2, 4, 1],
        ];
        let mut verdicts = Vec::new();
        for order in &orders {
            let s = build(order);
            let certificate = decide(&s).unwrap();
            assert!(certificate.validate(&s));
            verdicts.push(matches!(certificate.verdict, Verdict::Infeasible));
        }
        assert!(verdicts.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn nonnegativity_rows_are_not_pruned_away() {
        // x >= 0 together with x <= -1 must stay infeasible; the
        // non-negativity row is the only lower bound.
        let mut s = system(&["x"]);
        s.push(Provenance::Nonnegativity(0), Relation::Ge, rat(0), vec![rat(1)]);
        s.push(Provenance::Given("x <= -1".into()), Relation::Ge, rat(-1), vec![rat(-1)]);
        let certificate = decide(&s).unwrap();
        assert!(certificate.is_infeasible());
        assert!(certificate.validate(&s));
    }

    #[test]
    fn witness_respects_pruning_substrate() {
        // Feasible system whose only binding constraints are the
        // substrate rows themselves.
        let mut s = system(&["x", "y"]);
        s.push(Provenance::Nonnegativity(0), Relation::Ge, rat(0), vec![rat(1), rat(0)]);
        s.push(Provenance::Nonnegativity(1), Relation::Ge, rat(0), vec![rat(0), rat(1)]);
        s.push(
            Provenance::Given("x + y <= 7".into()),
            Relation::Ge,
            rat(7),
            vec![rat(-1), rat(-1)],
        );
        s.push(
            Provenance::Given("x + 2y >= 0".into()),
            Relation::Ge,
            rat(0),
            vec![rat(1), rat(2)],
        );
        let certificate = decide(&s).unwrap();
        assert!(certificate.is_feasible());
        assert!(certificate.validate(&s));
    }

    #[test]
    fn free_variable_budget_is_enforced() {
        let names: Vec<String> = (0..13).map(|i| format!("x{i}")).collect();
        let mut s = FeasibilitySystem::new(names);
        for v in 0..13 {
            let mut coeffs = vec![rat(0); 13];
            coeffs[v] = rat(1);
            s.push(Provenance::Nonnegativity(v), Relation::Ge, rat(0), coeffs);
        }
        assert!(matches!(decide(&s), Err(Error::Resource(_))));
    }

    #[test]
    fn substituted_rows_fold_fixed_values() {
        let mut s = system(&["a_0", "a_1"]);
        s.push(Provenance::FixedValue(0), Relation::Eq, rat(-1), vec![rat(1), rat(0)]);
        s.push(
            Provenance::MacWilliamsRow(1),
            Relation::Ge,
            rat(0),
            vec![rat(5), rat(-2)],
        );
        let row = s.substituted(1);
        assert_eq!(row.constant, rat(5));
        assert!(row.coeffs[0].is_zero());
        assert_eq!(row.coeffs[1], rat(-2));
    }

    #[test]
    fn render_is_deterministic_and_readable() {
        let mut s = system(&["a_7", "a_8"]);
        s.push(
            Provenance::MacWilliamsRow(2),
            Relation::Ge,
            rat(600),
            vec![rat(-6), rat(-8)],
        );
        assert_eq!(
            s.render(),
            "vars: a_7 a_8\nc0 [macwilliams k=2]: 600 - 6*a_7 - 8*a_8 >= 0\n"
        );
        let first = s.render();
        assert_eq!(first, s.render());
    }
}
