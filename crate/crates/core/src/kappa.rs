use crate::perm::factorial;
use crate::{Degree, Error, Generator, GradedSequence, Permutation, Result, Sign, Word};

/// Default cap on `n` for sweeps over all of `S_n` (720 elements at `n = 6`).
pub const DEFAULT_EXHAUSTIVE_BOUND: usize = 6;

/// The left action `sigma(g)_i = g_{sigma^-1(i)}`; labels travel with degrees.
pub fn act(sigma: &Permutation, g: &GradedSequence) -> Result<GradedSequence> {
    Error::check_len(sigma.len(), g.len())?;
    let mut entries = g.entries().to_vec();
    for (i, symbol) in g.entries().iter().enumerate() {
        entries[sigma.apply(i)] = symbol.clone();
    }
    Ok(GradedSequence::from_valid(entries))
}

/// A minimal word in the adjacent transpositions whose product is `sigma`.
///
/// Bubble-sorts the one-line form of `sigma`. Swapping entries `j, j+1` of the
/// one-line form multiplies by `s_j` on the right, so sorting with swaps
/// `j_1, ..., j_m` gives `sigma s_{j_1} ... s_{j_m} = e`; the returned word is
/// `s_{j_m} ... s_{j_1}`. Its length is the inversion count of `sigma`.
pub fn decompose_adjacent(sigma: &Permutation) -> Word {
    let n = sigma.len();
    let mut line = sigma.images().to_vec();
    let mut swaps = Vec::with_capacity(sigma.inversion_count());
    for pass in 0..n.saturating_sub(1) {
        let mut swapped = false;
        for j in 0..n - 1 - pass {
            if line[j] > line[j + 1] {
                line.swap(j, j + 1);
                swaps.push(Generator::s(j + 1));
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    swaps.reverse();
    Word::from_valid(n.max(2), swaps)
}

/// The Koszul sign `kappa(sigma, g)`.
///
/// Evaluated through [`decompose_adjacent`] with the cocycle rule
/// `kappa(sigma tau, g) = kappa(sigma, tau(g)) kappa(tau, g)` and
/// `kappa(s_i, h) = (-1)^{|h_i||h_{i+1}|}`.
pub fn kappa(sigma: &Permutation, g: &GradedSequence) -> Result<Sign> {
    Error::check_len(sigma.len(), g.len())?;
    Ok(decompose_adjacent(sigma).sign_on_parities(&mut g.parities()))
}

/// `Z mod 2` with `Z = sum |g_i||g_j|` over the inversion pairs `i < j`,
/// `sigma(i) > sigma(j)`; `kappa(sigma, g) = (-1)^Z`.
pub fn kappa_exponent(sigma: &Permutation, g: &GradedSequence) -> Result<u8> {
    Error::check_len(sigma.len(), g.len())?;
    let odd = g.parities();
    Ok(sigma
        .inversions()
        .fold(0u8, |z, (i, j)| z ^ (odd[i] & odd[j]) as u8))
}

/// The exponent of `kappa(sigma, g)` as a formal sum of degree products
/// `|a||b|`, one term per pair of symbols `(a, b)` that is swapped an odd
/// number of times along the bubble-sort word. Each pair is ordered by
/// position in `g`; the list is sorted by those positions.
pub fn kappa_terms(sigma: &Permutation, g: &GradedSequence) -> Result<Vec<(String, String)>> {
    Error::check_len(sigma.len(), g.len())?;
    let n = g.len();
    // positions in g of the symbols currently occupying each slot
    let mut state: Vec<usize> = (0..n).collect();
    let mut crossed = vec![vec![false; n]; n];
    for l in decompose_adjacent(sigma).letters().iter().rev() {
        let (a, b) = (state[l.index - 1], state[l.index]);
        let (lo, hi) = (a.min(b), a.max(b));
        crossed[lo][hi] ^= true;
        state.swap(l.index - 1, l.index);
    }
    let mut terms = Vec::new();
    for (i, row) in crossed.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            if c {
                terms.push((
                    g.get(i).label.to_string(),
                    g.get(j).label.to_string(),
                ));
            }
        }
    }
    Ok(terms)
}

pub fn odd_count(degrees: &[Degree]) -> usize {
    degrees.iter().filter(|d| d.is_odd()).count()
}

fn check_degrees_len(degrees: &[Degree]) -> Result<()> {
    if degrees.len() < 2 {
        Err(Error::Domain(format!(
            "need at least 2 degrees, got {}",
            degrees.len()
        )))
    } else {
        Ok(())
    }
}

/// Whether `kappa(-, f)` is a group morphism `S_n -> {+1, -1}`: all degrees
/// share a parity, or exactly one is odd.
pub fn is_morphism(degrees: &[Degree]) -> Result<bool> {
    check_degrees_len(degrees)?;
    let odd = odd_count(degrees);
    Ok(odd <= 1 || odd == degrees.len())
}

/// Whether `kappa(-, f)` is constantly `+1`: at most one degree is odd.
pub fn is_constant_one(degrees: &[Degree]) -> Result<bool> {
    check_degrees_len(degrees)?;
    Ok(odd_count(degrees) <= 1)
}

/// Checks `kappa(sigma tau, f) = kappa(sigma, f) kappa(tau, f)` over all pairs
/// of `S_n`. Fails with a resource error when `n > bound`.
pub fn morphism_bruteforce(degrees: &[Degree], bound: usize) -> Result<bool> {
    check_degrees_len(degrees)?;
    let n = degrees.len();
    Error::check_bound(n, bound)?;
    let f = GradedSequence::from_degrees(degrees)?;
    let group: Vec<Permutation> = Permutation::all(n).collect();
    let row: Vec<Sign> = group
        .iter()
        .map(|s| kappa(s, &f))
        .collect::<Result<_>>()?;
    debug_assert_eq!(row.len(), factorial(n));
    for (a, sigma) in group.iter().enumerate() {
        for (b, tau) in group.iter().enumerate() {
            if row[(sigma * tau).rank()] != row[a] * row[b] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(d: &[i64]) -> GradedSequence {
        GradedSequence::from_degrees(d).unwrap()
    }

    fn p(one_line: &[usize]) -> Permutation {
        Permutation::from_one_line(one_line).unwrap()
    }

    fn degrees(d: &[i64]) -> Vec<Degree> {
        d.iter().copied().map(Degree).collect()
    }

    #[test]
    fn action_examples() {
        let f = seq(&[1, 2, 3]);
        let s1 = Permutation::adjacent(3, 1).unwrap();
        assert_eq!(act(&s1, &f).unwrap().labels(), vec!["f2", "f1", "f3"]);
        assert_eq!(act(&Permutation::identity(3), &f).unwrap(), f);
        let g = act(&p(&[3, 1, 2]), &f).unwrap();
        assert_eq!(g.labels(), vec!["f2", "f3", "f1"]);
        assert_eq!(g.degrees(), degrees(&[2, 3, 1]));
        assert!(act(&Permutation::identity(4), &f).is_err());
    }

    #[test]
    fn example_action() {
        let f = seq(&[1, 2, 3, 4, 5]);
        let g = act(&p(&[2, 5, 3, 1, 4]), &f).unwrap();
        assert_eq!(g.labels(), vec!["f4", "f1", "f3", "f5", "f2"]);
    }

    #[test]
    fn decomposition_examples() {
        assert!(decompose_adjacent(&Permutation::identity(4)).is_empty());
        assert_eq!(
            decompose_adjacent(&p(&[2, 1])).letters(),
            &[Generator::s(1)]
        );
        let w = decompose_adjacent(&p(&[3, 1, 2]));
        assert_eq!(w.len(), 2);
        assert_eq!(w.project(), p(&[3, 1, 2]));
        // deterministic
        assert_eq!(w, decompose_adjacent(&p(&[3, 1, 2])));
    }

    #[test]
    fn decomposition_is_minimal_and_correct() {
        for n in 2..=6 {
            for sigma in Permutation::all(n) {
                let w = decompose_adjacent(&sigma);
                assert_eq!(w.project(), sigma);
                assert_eq!(w.len(), sigma.inversion_count());
                assert!(w.is_reduced());
            }
        }
    }

    #[test]
    fn kappa_examples() {
        let f = seq(&[1, 1, 0]);
        assert_eq!(kappa(&Permutation::identity(3), &f).unwrap(), Sign::Plus);
        assert_eq!(
            kappa(&Permutation::adjacent(3, 1).unwrap(), &f).unwrap(),
            Sign::Minus
        );
        let rho = p(&[2, 5, 3, 1, 4]);
        assert_eq!(kappa(&rho, &seq(&[1, 1, 1, 1, 1])).unwrap(), Sign::Minus);
        assert_eq!(kappa_exponent(&rho, &seq(&[1, 1, 1, 1, 1])).unwrap(), 1);
        assert!(kappa(&rho, &f).is_err());
        assert!(kappa_exponent(&rho, &f).is_err());
    }

    #[test]
    fn kappa_of_s2_s1() {
        // (s2 s1)(f) = (f2, f3, f1); exponent |f1||f2| + |f1||f3|
        let s2s1 = p(&[3, 1, 2]);
        for bits in 0..8u8 {
            let d: Vec<i64> = (0..3).map(|k| ((bits >> k) & 1) as i64).collect();
            let f = seq(&d);
            let e = (d[0] * d[1] + d[0] * d[2]) as u8 & 1;
            assert_eq!(kappa(&s2s1, &f).unwrap(), Sign::from_exponent(e));
        }
    }

    #[test]
    fn exponent_of_generator_and_identity() {
        let f = seq(&[3, -5, 2, 7]);
        assert_eq!(kappa_exponent(&Permutation::identity(4), &f).unwrap(), 0);
        assert_eq!(
            kappa_exponent(&Permutation::adjacent(4, 1).unwrap(), &f).unwrap(),
            1
        );
        assert_eq!(
            kappa_exponent(&Permutation::adjacent(4, 2).unwrap(), &f).unwrap(),
            0
        );
    }

    #[test]
    fn example_terms() {
        let f = seq(&[1, 2, 3, 4, 5]);
        let terms = kappa_terms(&p(&[2, 5, 3, 1, 4]), &f).unwrap();
        let mut got: Vec<String> = terms.iter().map(|(a, b)| format!("{a}{b}")).collect();
        got.sort();
        assert_eq!(got, vec!["f1f4", "f2f3", "f2f4", "f2f5", "f3f4"]);
    }

    #[test]
    fn morphism_predicates() {
        assert!(is_morphism(&degrees(&[0, 2, 4])).unwrap());
        assert!(is_morphism(&degrees(&[1, 0, 0, 0])).unwrap());
        assert!(!is_morphism(&degrees(&[1, 1, 0])).unwrap());
        assert!(is_morphism(&degrees(&[1, 1])).unwrap());
        assert!(is_morphism(&degrees(&[-3, 5, 1])).unwrap());
        assert!(is_morphism(&degrees(&[5])).is_err());

        assert!(is_constant_one(&degrees(&[0, 2, 4])).unwrap());
        assert!(is_constant_one(&degrees(&[1, 2, 4])).unwrap());
        assert!(!is_constant_one(&degrees(&[1, 1, 1])).unwrap());
        assert!(is_constant_one(&[]).is_err());
    }

    #[test]
    fn morphism_bruteforce_examples() {
        let b = DEFAULT_EXHAUSTIVE_BOUND;
        assert!(morphism_bruteforce(&degrees(&[0, 2, 4]), b).unwrap());
        assert!(!morphism_bruteforce(&degrees(&[1, 1, 0]), b).unwrap());
        assert!(morphism_bruteforce(&degrees(&[1, 1]), b).unwrap());
        assert_eq!(
            morphism_bruteforce(&degrees(&[1; 7]), b),
            Err(Error::Resource { n: 7, bound: 6 })
        );
    }

    #[test]
    fn base_point_sensitivity_at_the_diagonal() {
        // |f| = (1,1,0), f' = (f1, f3, f2)
        let f = seq(&[1, 1, 0]);
        let f_prime = act(&Permutation::adjacent(3, 2).unwrap(), &f).unwrap();
        assert_eq!(f_prime.labels(), vec!["f1", "f3", "f2"]);
        let s1 = Permutation::adjacent(3, 1).unwrap();
        assert_eq!(kappa(&s1, &f).unwrap(), Sign::Minus);
        assert_eq!(kappa(&s1, &f_prime).unwrap(), Sign::Plus);
    }
}
