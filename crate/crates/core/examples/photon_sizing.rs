//! Field strength and pulse length for a guided photon of radius b and
//! speed deficit 10^-alpha.
//!
//! Run with `cargo run --example photon_sizing`.

use photon_audit::relativity::{lorentz_factor, published_inputs, table2, SpeedRatio};

fn main() -> photon_audit::Result<()> {
    for alpha in [1.0, 2.0, 4.0, 8.0] {
        let s = SpeedRatio::new(alpha)?;
        let g = lorentz_factor(alpha)?;
        println!(
            "alpha {alpha}: u/c = 1 - {:.1e}, Lorentz {:.6e} (large-alpha form {:.6e}){}",
            s.deficit(),
            g.exact,
            g.approx,
            if g.approximation_warning {
                "  [approximation poor]"
            } else {
                ""
            }
        );
    }

    println!();
    for lambda in [500e-9, 1000e-9] {
        println!("lambda = {:.0} nm", lambda * 1e9);
        for row in table2(&published_inputs(), lambda)? {
            println!(
                "  b {:>5.0} am  alpha {}  E0 {:.3e} V/m  l/lambda {:.3e}  l {:.3e} m  {:?} {:?}",
                row.b * 1e18,
                row.alpha,
                row.e0,
                row.l_over_lambda,
                row.l,
                row.consistency,
                row.mismatched
            );
        }
    }
    Ok(())
}
