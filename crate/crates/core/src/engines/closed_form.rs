use crate::poly::DensePolynomial;

/// I(S_{2,t}) = (1+2x)^t + x(1+x)^t.
pub fn closed_form_s(t: u64) -> DensePolynomial {
    let p2 = DensePolynomial::linear(1, 2);
    let p1 = DensePolynomial::linear(1, 1);
    p2.pow(t).add(&p1.pow(t).shift(1))
}

/// I(T_{m,t}) = I(S_{2,t})^m + x(1+2x)^{mt}.
pub fn closed_form_t(m: u64, t: u64) -> DensePolynomial {
    let p2 = DensePolynomial::linear(1, 2);
    closed_form_s(t).pow(m).add(&p2.pow(m * t).shift(1))
}

/// I(TG_{m,t}) = (1+x) I(T_{3,t})^m + x I(S_{2,t})^{3m}, from deleting v_0.
pub fn closed_form_tg(m: u64, t: u64) -> DensePolynomial {
    let p1 = DensePolynomial::linear(1, 1);
    let keep_root_out = p1.mul(&closed_form_t(3, t).pow(m));
    let take_root = closed_form_s(t).pow(3 * m).shift(1);
    keep_root_out.add(&take_root)
}
