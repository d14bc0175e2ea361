use std::cmp::Ordering;
use std::fmt;

use super::roots::{CartanType, PositiveSystem, Root, RootSystem};
use super::weight::Weight;
use crate::error::{Error, Result};

/// Maximal parabolic with abelian nilradical, given by a marked simple root β₁.
#[derive(Clone, Debug)]
pub struct MarkedParabolic {
    pub root_system: RootSystem,
    /// 0-based index of the marked simple root.
    pub marked: usize,
    /// Φ_Q∖Φ_L: γ-block first, then ascending lexicographic order.
    pub noncompact: Vec<Root>,
    pub gammas: Vec<Weight>,
    pub lambda: Weight,
    pub levi: PositiveSystem,
}

impl fmt::Display for MarkedParabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{} node {}",
            self.root_system.cartan_type,
            self.root_system.rank,
            self.marked + 1
        )
    }
}

/// `marked_node` is 1-based (Bourbaki labelling).
pub fn build_marked_parabolic(
    cartan_type: CartanType,
    rank: usize,
    marked_node: usize,
) -> Result<MarkedParabolic> {
    let rs = RootSystem::new(cartan_type, rank)?;
    if marked_node == 0 || marked_node > rank {
        return Err(Error::RootData(format!(
            "marked node {marked_node} out of range 1..={rank}"
        )));
    }
    let marked = marked_node - 1;
    if let Some(bad) = rs.positive_roots.iter().find(|r| r.coeffs[marked] >= 2) {
        return Err(Error::NonHermitianMarking {
            node: marked_node,
            root: bad.vector.to_string(),
            coefficient: bad.coeffs[marked],
        });
    }
    let mut noncompact: Vec<Root> = rs
        .positive_roots
        .iter()
        .filter(|r| r.coeffs[marked] == 1)
        .cloned()
        .collect();
    noncompact.sort_by(|a, b| lex_cmp(marked, a, b));
    let gammas = cascade(&rs, marked, &noncompact);
    let (mut block, rest): (Vec<Root>, Vec<Root>) = noncompact
        .into_iter()
        .partition(|r| gammas.contains(&r.vector));
    block.sort_by_key(|r| gammas.iter().position(|g| *g == r.vector));
    block.extend(rest);
    let lambda = -&rs.fundamental_weight(marked);
    let levi = PositiveSystem {
        simple: rs
            .simple_roots
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != marked)
            .map(|(_, a)| a.clone())
            .collect(),
        positive: rs
            .positive_roots
            .iter()
            .filter(|r| r.coeffs[marked] == 0)
            .map(|r| r.vector.clone())
            .collect(),
    };
    Ok(MarkedParabolic {
        root_system: rs,
        marked,
        noncompact: block,
        gammas,
        lambda,
        levi,
    })
}

/// Lexicographic order on simple-root coordinates, marked node most significant.
pub fn lex_cmp(marked: usize, a: &Root, b: &Root) -> Ordering {
    lex_key(marked, a).cmp(&lex_key(marked, b))
}

fn lex_key(marked: usize, r: &Root) -> Vec<i64> {
    let mut key = vec![r.coeffs[marked]];
    key.extend(
        r.coeffs
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != marked)
            .map(|(_, &c)| c),
    );
    key
}

fn strongly_orthogonal(rs: &RootSystem, a: &Weight, b: &Weight) -> bool {
    let s = a + b;
    let d = a - b;
    !s.is_zero() && !d.is_zero() && !rs.is_root(&s) && !rs.is_root(&d)
}

/// `sorted` must be in ascending lexicographic order.
fn cascade(rs: &RootSystem, marked: usize, sorted: &[Root]) -> Vec<Weight> {
    let mut gammas = vec![rs.simple_roots[marked].clone()];
    loop {
        let next = sorted.iter().find(|r| {
            gammas
                .iter()
                .all(|g| strongly_orthogonal(rs, g, &r.vector))
        });
        match next {
            Some(r) => gammas.push(r.vector.clone()),
            None => return gammas,
        }
    }
}

impl MarkedParabolic {
    pub fn rank(&self) -> usize {
        self.gammas.len()
    }

    pub fn dim(&self) -> usize {
        self.noncompact.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.root_system.ambient_dim()
    }

    /// Recompute the cascade from the stored noncompact roots.
    pub fn strongly_orthogonal_cascade(&self) -> Vec<Weight> {
        let mut sorted = self.noncompact.clone();
        sorted.sort_by(|a, b| lex_cmp(self.marked, a, b));
        cascade(&self.root_system, self.marked, &sorted)
    }

    pub fn is_strongly_orthogonal(&self, a: &Weight, b: &Weight) -> bool {
        strongly_orthogonal(&self.root_system, a, b)
    }

    /// ϖ_{β₁} = −λ.
    pub fn marked_fundamental_weight(&self) -> Weight {
        -&self.lambda
    }

    /// `λ_j = λ + γ₁ + … + γ_j`.
    pub fn lambda_j(&self, j: usize) -> Weight {
        self.gammas[..j].iter().fold(self.lambda.clone(), |acc, g| &acc + g)
    }

    /// `kλ + Σ m_i γ_i`.
    pub fn label(&self, k: u32, m: &[u32]) -> Weight {
        m.iter()
            .zip(&self.gammas)
            .fold(self.lambda.scale_int(k as i64), |acc, (&mi, g)| {
                &acc + &g.scale_int(mi as i64)
            })
    }

    pub fn is_levi_root(&self, w: &Weight) -> bool {
        self.levi.positive.iter().any(|a| a == w || (-a) == *w)
    }

    pub fn noncompact_index(&self, w: &Weight) -> Option<usize> {
        self.noncompact.iter().position(|r| r.vector == *w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    #[test]
    fn sl2_marked() {
        let p = build_marked_parabolic(CartanType::A, 1, 1).unwrap();
        assert_eq!(p.rank(), 1);
        assert_eq!(p.dim(), 1);
        assert_eq!(p.gammas[0], p.root_system.simple_roots[0]);
    }

    #[test]
    fn a3_node2_cascade() {
        let p = build_marked_parabolic(CartanType::A, 3, 2).unwrap();
        let s = &p.root_system.simple_roots;
        assert_eq!(p.dim(), 4);
        assert_eq!(p.gammas, vec![s[1].clone(), &(&s[0] + &s[1]) + &s[2]]);
        let pairings: Vec<Rational64> = s.iter().map(|a| p.lambda.pair_coroot(a)).collect();
        assert_eq!(pairings, [0, -1, 0].map(Rational64::from_integer).to_vec());
        assert_eq!(p.strongly_orthogonal_cascade(), p.gammas);
    }

    #[test]
    fn a5_node3_rank() {
        let p = build_marked_parabolic(CartanType::A, 5, 3).unwrap();
        assert_eq!(p.rank(), 3);
        assert_eq!(p.dim(), 9);
    }

    #[test]
    fn non_hermitian_marking_rejected() {
        assert!(matches!(
            build_marked_parabolic(CartanType::B, 3, 2),
            Err(Error::NonHermitianMarking { .. })
        ));
        assert!(matches!(
            build_marked_parabolic(CartanType::D, 5, 3),
            Err(Error::NonHermitianMarking { .. })
        ));
    }

    #[test]
    fn quadric_markings() {
        let b = build_marked_parabolic(CartanType::B, 3, 1).unwrap();
        assert_eq!((b.rank(), b.dim()), (2, 5));
        let d = build_marked_parabolic(CartanType::D, 4, 1).unwrap();
        assert_eq!((d.rank(), d.dim()), (2, 6));
    }

    #[test]
    fn gamma_block_first() {
        let p = build_marked_parabolic(CartanType::A, 4, 2).unwrap();
        for (i, g) in p.gammas.iter().enumerate() {
            assert_eq!(&p.noncompact[i].vector, g);
        }
        let rest = &p.noncompact[p.rank()..];
        for w in rest.windows(2) {
            assert_eq!(lex_cmp(p.marked, &w[0], &w[1]), Ordering::Less);
        }
    }
}
