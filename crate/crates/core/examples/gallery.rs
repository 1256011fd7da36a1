//! Prints the text and LaTeX renderings of the built-in example circuits.

use qsim_core::algorithms::{build_grover2, build_repetition_qec, build_teleportation};
use qsim_core::{draw_ascii, to_tex};

fn main() {
    for c in [
        build_grover2(),
        build_teleportation(),
        build_repetition_qec(Some(0)).unwrap(),
    ] {
        println!("{}", draw_ascii(&c));
        println!("{}", to_tex(&c));
    }
}
