//! The named algebraic equations. Bivariate ones use the grading where the
//! exponent of x counts left-to-right maxima and the exponent of y counts
//! the remaining elements, except for the all/maxima regrading of `eq_a_am`
//! where x counts total length and y counts maxima.

use crate::QEquation;

/// y S^2 + (xy + x - 2y - 1) S + 1 + y = 0 — skeletons by maxima and
/// marked cells.
pub fn eq_s_bivariate() -> QEquation {
    QEquation::from_terms(
        "eq_s",
        &[
            (2, 0, 1, 1),
            (1, 1, 1, 1),
            (1, 1, 0, 1),
            (1, 0, 1, -2),
            (1, 0, 0, -1),
            (0, 0, 0, 1),
            (0, 0, 1, 1),
        ],
    )
}

/// S^2 + (2x - 3) S + 2 = 0 — skeletons by maxima.
pub fn eq_s_univariate() -> QEquation {
    QEquation::from_terms(
        "eq_s_univariate",
        &[(2, 0, 0, 1), (1, 1, 0, 2), (1, 0, 0, -3), (0, 0, 0, 2)],
    )
}

/// y A^2 + (x - y - 1) A + 1 = 0 — all 321-avoiders by maxima and others.
pub fn eq_a_bivariate() -> QEquation {
    QEquation::from_terms(
        "eq_a",
        &[
            (2, 0, 1, 1),
            (1, 1, 0, 1),
            (1, 0, 1, -1),
            (1, 0, 0, -1),
            (0, 0, 0, 1),
        ],
    )
}

/// x A^2 + (xy - x - 1) A + 1 = 0 — all 321-avoiders by length and maxima.
pub fn eq_a_am() -> QEquation {
    QEquation::from_terms(
        "eq_a_am",
        &[
            (2, 1, 0, 1),
            (1, 1, 1, 1),
            (1, 1, 0, -1),
            (1, 0, 0, -1),
            (0, 0, 0, 1),
        ],
    )
}

/// x A^2 - A + 1 = 0 — the Catalan equation (all 321-avoiders by length).
pub fn eq_catalan() -> QEquation {
    QEquation::from_terms(
        "eq_catalan",
        &[(2, 1, 0, 1), (1, 0, 0, -1), (0, 0, 0, 1)],
    )
}

/// y(1+x) W^2 - (xy + 2y + 1) W + (1+x)(1+y) = 0 — plus-irreducible
/// 321-avoiders by maxima and others.
pub fn eq_a_plus_irr_bivariate() -> QEquation {
    QEquation::from_terms(
        "eq_a_plus_irr",
        &[
            (2, 0, 1, 1),
            (2, 1, 1, 1),
            (1, 1, 1, -1),
            (1, 0, 1, -2),
            (1, 0, 0, -1),
            (0, 0, 0, 1),
            (0, 1, 0, 1),
            (0, 0, 1, 1),
            (0, 1, 1, 1),
        ],
    )
}

/// x(x+1) W^2 - (x+1)^2 W + (x+1)^2 = 0 — plus-irreducible by length.
pub fn eq_a_plus_irr_univariate() -> QEquation {
    QEquation::from_terms(
        "eq_a_plus_irr_univariate",
        &[
            (2, 1, 0, 1),
            (2, 2, 0, 1),
            (1, 0, 0, -1),
            (1, 1, 0, -2),
            (1, 2, 0, -1),
            (0, 0, 0, 1),
            (0, 1, 0, 2),
            (0, 2, 0, 1),
        ],
    )
}

/// (x^4 + x^2 + x) W^2 - (1 + 2x^2) W + 1 = 0 — minus-irreducible by length.
pub fn eq_a_minus_irr_univariate() -> QEquation {
    QEquation::from_terms(
        "eq_a_minus_irr_univariate",
        &[
            (2, 1, 0, 1),
            (2, 2, 0, 1),
            (2, 4, 0, 1),
            (1, 0, 0, -1),
            (1, 2, 0, -2),
            (0, 0, 0, 1),
        ],
    )
}

/// W^2 - (x - y + 1) W + x = 0 — nonempty plus-indecomposable 321-avoiders
/// by maxima and others.
pub fn eq_a_plus_ind_bivariate() -> QEquation {
    QEquation::from_terms(
        "eq_a_plus_ind",
        &[
            (2, 0, 0, 1),
            (1, 1, 0, -1),
            (1, 0, 1, 1),
            (1, 0, 0, -1),
            (0, 1, 0, 1),
        ],
    )
}

/// W^2 - W + x = 0 — nonempty plus-indecomposable 321-avoiders by length.
pub fn eq_a_plus_ind_univariate() -> QEquation {
    QEquation::from_terms(
        "eq_a_plus_ind_univariate",
        &[(2, 0, 0, 1), (1, 0, 0, -1), (0, 1, 0, 1)],
    )
}

/// (1+y) W^2 - (1 + x + xy) W + xy + x = 0 — nonempty plus-indecomposable
/// skeletons by maxima and marked cells.
pub fn eq_s_plus_ind() -> QEquation {
    QEquation::from_terms(
        "eq_s_plus_ind",
        &[
            (2, 0, 0, 1),
            (2, 0, 1, 1),
            (1, 0, 0, -1),
            (1, 1, 0, -1),
            (1, 1, 1, -1),
            (0, 1, 1, 1),
            (0, 1, 0, 1),
        ],
    )
}

/// (1+x)(1+y) W^2 + (xy - 1) W + xy = 0 — absolutely irreducible
/// 321-avoiders by maxima and others (omitting the empty one, 1, and 12).
pub fn eq_a_abs_irr_bivariate() -> QEquation {
    QEquation::from_terms(
        "eq_a_abs_irr",
        &[
            (2, 0, 0, 1),
            (2, 1, 0, 1),
            (2, 0, 1, 1),
            (2, 1, 1, 1),
            (1, 1, 1, 1),
            (1, 0, 0, -1),
            (0, 1, 1, 1),
        ],
    )
}

/// (x+1)^2 W^2 + (x^2 - 1) W + x^2 = 0 — absolutely irreducible by length
/// (omitting the empty one, 1, and 12).
pub fn eq_a_abs_irr_univariate() -> QEquation {
    QEquation::from_terms(
        "eq_a_abs_irr_univariate",
        &[
            (2, 0, 0, 1),
            (2, 1, 0, 2),
            (2, 2, 0, 1),
            (1, 2, 0, 1),
            (1, 0, 0, -1),
            (0, 2, 0, 1),
        ],
    )
}

/// F^6 + (-2x+3)F^4 + (-2x-1)F^3 + (x^2-3x+3)F^2 + (2x^2-2x-1)F + x^2 + x
/// = 0 — the fractal closure class by length.
pub fn eq_frac2() -> QEquation {
    QEquation::from_terms(
        "eq_frac2",
        &[
            (6, 0, 0, 1),
            (4, 1, 0, -2),
            (4, 0, 0, 3),
            (3, 1, 0, -2),
            (3, 0, 0, -1),
            (2, 2, 0, 1),
            (2, 1, 0, -3),
            (2, 0, 0, 3),
            (1, 2, 0, 2),
            (1, 1, 0, -2),
            (1, 0, 0, -1),
            (0, 1, 0, 1),
            (0, 2, 0, 1),
        ],
    )
}

/// 2x W^2 - (1+x) W + 1 = 0 — the little Schroeder numbers 1, 1, 3, 11, 45...
pub fn eq_little_schroder() -> QEquation {
    QEquation::from_terms(
        "eq_little_schroder",
        &[
            (2, 1, 0, 2),
            (1, 0, 0, -1),
            (1, 1, 0, -1),
            (0, 0, 0, 1),
        ],
    )
}

/// Look up an equation by the name used on the command line.
pub fn by_name(name: &str) -> Option<QEquation> {
    match name.to_ascii_lowercase().as_str() {
        "eqs" | "s" => Some(eq_s_univariate()),
        "catalan" | "a" => Some(eq_catalan()),
        "eqfrac2" | "frac2" | "f" => Some(eq_frac2()),
        "plus-irr" => Some(eq_a_plus_irr_univariate()),
        "minus-irr" => Some(eq_a_minus_irr_univariate()),
        "abs-irr" => Some(eq_a_abs_irr_univariate()),
        "schroder" => Some(eq_little_schroder()),
        _ => None,
    }
}
