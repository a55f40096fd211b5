//! The cross product on `R^7`, split octonions and `G_2` membership of `tau_7`.

use hitchin_forge::bender::{b0_family, B0Kind};
use hitchin_forge::exactnum::{fundamental_unit, int, Matrix};
use hitchin_forge::g2core::{cross7, in_g2, j7_pairing, oct_mul, oct_norm, Octonion};
use hitchin_forge::symrep::tau;

fn main() -> hitchin_forge::Result<()> {
    let v: Vec<_> = [1, 0, 2, -1, 0, 3, 1].into_iter().map(int).collect();
    let w: Vec<_> = [0, 1, 1, 0, -2, 0, 1].into_iter().map(int).collect();
    let c = cross7(&v, &w)?;
    println!("v x w = {:?}", c.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("v^T J (v x w) = {}", j7_pairing(&v, &c)?);
    let x = Octonion::new(int(2), v)?;
    let y = Octonion::new(int(-1), w)?;
    println!("N(xy) = {}, N(x) N(y) = {}", oct_norm(&oct_mul(&x, &y)?)?, oct_norm(&x)? * oct_norm(&y)?);
    let m = Matrix::from_rows(vec![vec![int(2), int(3)], vec![int(1), int(2)]])?;
    println!("tau_7([[2,3],[1,2]]) in G2: {}", in_g2(&tau(7, &m)?)?);
    let u = fundamental_unit(3)?.element();
    println!("G2 bending matrix in G2: {}", in_g2(&b0_family(B0Kind::G2, 7, &u, 1)?)?);
    println!("SO_n7 bending matrix in G2: {}", in_g2(&b0_family(B0Kind::SoN7, 7, &u, 1)?)?);
    Ok(())
}
