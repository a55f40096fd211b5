//! `tau_n` of a 2x2 matrix, the invariant form `J_n` and the trace polynomial.

use hitchin_forge::exactnum::{int, Matrix};
use hitchin_forge::symrep::{j_matrix, tau, trace_poly};

fn main() -> hitchin_forge::Result<()> {
    let m = Matrix::from_rows(vec![vec![int(2), int(1)], vec![int(1), int(1)]])?;
    for n in 2..=5 {
        let t = tau(n, &m)?;
        let j = j_matrix(n);
        let keeps = &(&t.transpose() * &j) * &t == j;
        let p = trace_poly(n)?;
        println!("n = {n}: tr tau_n = {}, P_n = {p}, P_n(3) = {}, preserves J_n: {keeps}", t.trace(), p.eval(&int(3)));
    }
    Ok(())
}
