fn main() {
    use num_complex::Complex64 as C;
    for (x, y) in [(1.0, 0.0), (1.0, 1.0), (0.3, 0.4), (0.0, 2.0), (3.0, 0.0), (2.0, 3.0)] {
        let w = C::new(x, y);
        println!("erf({w}) = {}", scs_core::cerf(w));
    }
}
