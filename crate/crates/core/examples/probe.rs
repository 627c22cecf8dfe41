use nalgebra::{Complex, DMatrix};
type C64 = Complex<f64>;
fn main() {
    let m = DMatrix::<C64>::from_row_slice(2, 3, &[
        C64::new(1.0, 2.0), C64::new(0.0, -1.0), C64::new(3.0, 0.5),
        C64::new(-1.0, 0.0), C64::new(2.0, 2.0), C64::new(0.0, 0.0),
    ]);
    let sv = m.clone().svd(false, false).singular_values;
    println!("svd ok: {:?}", sv.as_slice());
    let a = DMatrix::<C64>::from_row_slice(2, 2, &[
        C64::new(2.0, 0.0), C64::new(0.0, 1.0),
        C64::new(0.0, -1.0), C64::new(3.0, 0.0),
    ]);
    let b = DMatrix::<C64>::identity(2, 2);
    let lu = a.clone().lu();
    let x = lu.solve(&b).unwrap();
    println!("lu ok: {:?}", (a.clone() * &x)[(0, 0)]);
    let h = &a * a.adjoint() + DMatrix::<C64>::identity(2, 2);
    println!("chol ok: {}", h.clone().cholesky().is_some());
    let se = h.clone().symmetric_eigen();
    println!("herm eig: {:?}", se.eigenvalues.as_slice());
    let r = DMatrix::<f64>::from_row_slice(2, 2, &[2.0, 1.0, 1.0, 2.0]);
    println!("real eig: {:?}", r.symmetric_eigen().eigenvalues.as_slice());
}
