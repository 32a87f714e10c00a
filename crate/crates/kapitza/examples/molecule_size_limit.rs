//! How large can a particle be and still diffract cleanly in a two-grating
//! geometry? The transit-time condition tau = (rho s^3) s^2 / h bounds the
//! size; for typical beam transit times that is a few nanometres, about a
//! thousand atoms.
//!
//!     cargo run --example molecule_size_limit

use kapitza::interferometry::{molecule_transit_bound, size_for_transit};

fn main() {
    let density = 2000.0; // kg/m^3, a typical molecular solid
    println!("density {density} kg/m^3, atomic spacing 0.3 nm assumed\n");
    println!("{:>12} {:>12} {:>14}", "tau (s)", "size (nm)", "atoms");
    for tau in [1e-3, 1e-4, 1e-5, 1e-6] {
        let s = size_for_transit(density, tau).unwrap();
        let atoms = (s / 0.3e-9).powi(3);
        println!("{tau:>12.0e} {:>12.2} {atoms:>14.0}", s * 1e9);
    }

    let c60 = 0.7e-9;
    println!(
        "\na C60-sized particle (s = {} nm) needs tau <= {:.1e} s — comfortable;",
        c60 * 1e9,
        molecule_transit_bound(1650.0, c60).unwrap()
    );
    let s = size_for_transit(density, 1e-5).unwrap();
    println!(
        "at tau = 1e-5 s the bound is s = {:.1} nm, i.e. no more than ~10^3 atoms.",
        s * 1e9
    );
}
