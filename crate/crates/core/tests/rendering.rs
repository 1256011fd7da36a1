use qsim_core::algorithms::{
    build_grover2, build_repetition_qec, build_teleportation, diffuser, oracle,
};
use qsim_core::{draw_ascii, to_tex, Circuit};

/// Splits LaTeX rows into trimmed cells so that goldens can be written
/// without caring about column alignment.
fn cells(tex: &str) -> Vec<Vec<String>> {
    tex.lines()
        .map(|l| {
            l.trim_end()
                .trim_end_matches("\\\\")
                .split('&')
                .map(|c| c.trim().to_string())
                .collect()
        })
        .collect()
}

fn assert_tex(circuit: &Circuit, golden: &str) {
    assert_eq!(
        cells(&to_tex(circuit)),
        cells(golden),
        "{}",
        to_tex(circuit)
    );
}

#[test]
fn grover_tex() {
    assert_tex(
        &build_grover2(),
        r"\lstick{q_{0}} & \gate{H} & \multigate{1}{\mathrm{oracle}} & \multigate{1}{\mathrm{diffuser}} & \meter & \qw \\
          \lstick{q_{1}} & \gate{H} & \ghost{\mathrm{oracle}} & \ghost{\mathrm{diffuser}} & \meter & \qw \\",
    );
}

#[test]
fn oracle_and_diffuser_tex() {
    assert_tex(
        &oracle(),
        r"\lstick{q_{0}} & \ctrl{1} & \qw \\
          \lstick{q_{1}} & \gate{Z} & \qw \\",
    );
    assert_tex(
        &diffuser(),
        r"\lstick{q_{0}} & \gate{H} & \gate{Z} & \ctrl{1} & \gate{H} & \qw \\
          \lstick{q_{1}} & \gate{H} & \gate{Z} & \gate{Z} & \gate{H} & \qw \\",
    );
}

#[test]
fn repetition_code_tex() {
    assert_tex(
        &build_repetition_qec(Some(0)).unwrap(),
        r"\lstick{q_{0}} & \ctrl{1} & \ctrl{2} & \gate{X} & \ctrl{3} & \qw & \ctrl{4} & \qw & \qw & \qw & \qw & \targ & \qw \\
          \lstick{q_{1}} & \targ & \qw & \qw & \qw & \ctrl{2} & \qw & \qw & \qw & \qw & \targ & \qw & \qw \\
          \lstick{q_{2}} & \qw & \targ & \qw & \qw & \qw & \qw & \ctrl{2} & \qw & \targ & \qw & \qw & \qw \\
          \lstick{q_{3}} & \qw & \qw & \qw & \targ & \targ & \qw & \qw & \meter & \ctrlo{-1} & \ctrl{-2} & \ctrl{-3} & \qw \\
          \lstick{q_{4}} & \qw & \qw & \qw & \qw & \qw & \targ & \targ & \meter & \ctrl{-1} & \ctrlo{-1} & \ctrl{-1} & \qw \\",
    );
}

#[test]
fn teleportation_tex() {
    assert_tex(
        &build_teleportation(),
        r"\lstick{q_{0}} & \ctrl{1} & \gate{H} & \meter & \qw & \ctrl{2} & \qw \\
          \lstick{q_{1}} & \targ & \qw & \meter & \ctrl{1} & \qw & \qw \\
          \lstick{q_{2}} & \qw & \qw & \qw & \targ & \gate{Z} & \qw \\",
    );
}

#[test]
fn teleportation_text() {
    let expected = concat!(
        "       ┏━┓ ┏━┓       \n",
        "q0: ━●━┃H┃━┃M┃━━━━●━━\n",
        "     ┃ ┗━┛ ┗━┛    ┃  \n",
        "     ┃     ┏━┓    ┃  \n",
        "q1: ━⊕━━━━━┃M┃━●━━╋━━\n",
        "           ┗━┛ ┃  ┃  \n",
        "               ┃ ┏┻┓ \n",
        "q2: ━━━━━━━━━━━⊕━┃Z┃━\n",
        "                 ┗━┛ \n",
    );
    assert_eq!(draw_ascii(&build_teleportation()), expected);
}

#[test]
fn grover_text() {
    let expected = concat!(
        "     ┏━┓ ┏━━━━━━┓ ┏━━━━━━━━┓ ┏━┓ \n",
        "q0: ━┃H┃━┃oracle┃━┃diffuser┃━┃M┃━\n",
        "     ┗━┛ ┃      ┃ ┃        ┃ ┗━┛ \n",
        "     ┏━┓ ┃      ┃ ┃        ┃ ┏━┓ \n",
        "q1: ━┃H┃━┃      ┃━┃        ┃━┃M┃━\n",
        "     ┗━┛ ┗━━━━━━┛ ┗━━━━━━━━┛ ┗━┛ \n",
    );
    assert_eq!(draw_ascii(&build_grover2()), expected);
}

#[test]
fn unblocked_grover_expands_in_place() {
    let tex = to_tex(&build_grover2().flattened());
    assert!(!tex.contains("multigate"));
    assert!(tex.lines().next().unwrap().contains("\\ctrl{1}"));
}
