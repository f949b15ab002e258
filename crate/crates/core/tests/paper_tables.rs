//! Golden values for the two worked examples and the sine comparison tables.

use std::f64::consts::PI;
use std::path::PathBuf;

use altquad::{
    alt_closed_form, alt_composite, alt_estimate, alt_intermediates, build_alt_tableau,
    build_romberg_tableau, composite_trapezoid, lookup, parts, read_csv_path, sample, simpson,
    simpson38, trapezoid, UniformGrid,
};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn example1() -> UniformGrid {
    read_csv_path(data("example1.csv")).unwrap()
}

fn example2() -> UniformGrid {
    read_csv_path(data("example2.csv")).unwrap()
}

fn sine32() -> UniformGrid {
    sample(&lookup("sin").unwrap(), PI, 2.0 * PI, 32).unwrap()
}

const TABLE_2: [&[f64]; 5] = [
    &[
        -2.0024698170,
        -1.9998433802,
        -2.0000010844,
        -1.9999999828,
        -2.0000000005,
    ],
    &[-2.0004999894, -1.9999967037, -2.0000000517, -1.9999999985],
    &[-2.0000526243, -1.9999992147, -2.0000000221],
    &[-2.0001193864, -1.9999967923],
    &[-2.0002147374],
];

#[allow(clippy::approx_constant)] // printed reference values
const TABLE_3: [&[f64]; 6] = [
    &[
        0.0,
        -2.09439510239320,
        -1.99857073182384,
        -2.00000554997968,
        -1.99999999458730,
        -2.00000000000133,
    ],
    &[
        -1.57079632679490,
        -2.00455975498443,
        -1.99998313094599,
        -2.00000001628805,
        -1.99999999999604,
    ],
    &[
        -1.89611889793705,
        -2.00026916994839,
        -1.99999975245458,
        -2.00000000005968,
    ],
    &[-1.97423160194556, -2.00001659104794, -1.99999999619085],
    &[-1.99357034377234, -2.00000103336942],
    &[-1.99839336097015],
];

const TABLE_4: [&[f64]; 5] = [
    &[
        -2.00034682466611,
        -1.99999967732512,
        -2.00000000125221,
        -1.99999999998018,
        -2.00000000000133,
    ],
    &[
        -2.00000103336942,
        -1.99999999619085,
        -2.00000000005968,
        -1.99999999999604,
    ],
    &[-2.00000414490512, -1.99999993815840, -2.00000000406904],
    &[-2.00001676514528, -1.99999894949885],
    &[-2.00007021208456],
];

#[test]
fn example1_grid_from_csv() {
    let g = example1();
    assert_eq!((g.a(), g.b(), g.n(), g.h()), (0.0, 10.0, 10, 1.0));
}

#[test]
fn example1_part_intermediates() {
    let g = example1();
    let halves = parts(&g, 5).unwrap();
    let expected = [
        (18_730.0, 96_845.0, 10.0, 23_400.0, 80_712.5),
        (
            8_061_705.0,
            17_983_570.0,
            78_125.0,
            9_979_475.0,
            15_051_412.5,
        ),
    ];
    for (part, (u1, o1, cap_h, u_inf, o_inf)) in halves.iter().zip(expected) {
        let sub = UniformGrid::new(part.left(), part.right(), part.values().to_vec()).unwrap();
        let it = alt_intermediates(&sub).unwrap();
        assert_eq!((it.u1, it.o1, it.cap_h), (u1, o1, cap_h));
        assert!((it.u_inf - u_inf).abs() < 1e-8);
        assert!((it.o_inf - o_inf).abs() < 1e-8);
    }
}

#[test]
fn example1_chain() {
    let g = example1();
    let t = build_alt_tableau(&g, &[10, 5, 2]).unwrap();
    let third = 1.0 / 3.0;
    let want = [
        ((0, 0), 12_707_500.0),
        ((1, 0), 12_567_500.0),
        ((2, 0), 12_511_500.0),
        ((0, 1), 12_520_833.0 + third),
        ((1, 1), 12_500_833.0 + third),
        ((0, 2), 12_500_000.0),
    ];
    for ((row, col), value) in want {
        assert!(
            (t.cell(row, col).unwrap().value - value).abs() < 1e-6,
            "({row},{col})"
        );
    }
    assert!((alt_closed_form(&g).unwrap().value - 12_707_500.0).abs() < 1e-6);
}

#[test]
fn example1_romberg_three_points() {
    let g = example1().decimate(5).unwrap();
    assert_eq!(trapezoid(&g).value, 50_000_000.0);
    assert_eq!(composite_trapezoid(&g).value, 25_390_625.0);
    assert_eq!(
        build_romberg_tableau(&g).unwrap().final_value(),
        17_187_500.0
    );
}

#[test]
fn example2_intermediates() {
    let g = example2();
    assert_eq!(g.n(), 12);
    assert!((g.a() - PI).abs() < 1e-15 && (g.b() - 2.0 * PI).abs() < 1e-15);

    let it = alt_intermediates(&g).unwrap();
    assert!((it.u1 + 1.9885637766).abs() < 1e-10);
    assert!((it.o1 + 1.9885637766).abs() < 1e-10);
    assert!((it.u_inf + 2.1693423017).abs() < 1e-10);
    assert!((it.o_inf + 1.8355973322).abs() < 1e-10);
    assert!((composite_trapezoid(&g).value + 1.9885637766).abs() < 1e-10);

    let halves = parts(&g, 6).unwrap();
    let h = g.h();
    for part in &halves {
        let sub = UniformGrid::new(part.left(), part.right(), part.values().to_vec()).unwrap();
        assert!((alt_estimate(&sub).unwrap().value + 1.0002499947).abs() < 1e-10);
    }
    assert!((h * halves[1].left_value() + 0.2617993878).abs() < 1e-10);
}

#[test]
fn example2_simpson_equivalences() {
    let g = example2();
    let a2 = alt_composite(&g, 2).unwrap().value;
    let a3 = alt_composite(&g, 3).unwrap().value;
    assert!((a2 - simpson(&g).unwrap().value).abs() <= 1e-12 * a2.abs());
    assert!((a3 - simpson38(&g).unwrap().value).abs() <= 1e-12 * a3.abs());
    assert!((a2 + 2.0000526243).abs() < 1e-9);
    assert!((a3 + 2.0001193864).abs() < 1e-9);
}

#[test]
fn table2() {
    let t = build_alt_tableau(&example2(), &[12, 6, 2, 3, 4]).unwrap();
    for (row, cells) in TABLE_2.iter().enumerate() {
        for (col, want) in cells.iter().enumerate() {
            let got = t.cell(row, col).unwrap().value;
            assert!((got - want).abs() <= 1e-9, "({row},{col}): {got} vs {want}");
        }
    }
    assert_eq!(t.final_estimate().signature, (12, 4));
}

#[test]
fn table3() {
    let r = build_romberg_tableau(&sine32()).unwrap();
    assert_eq!(r.cell_count(), 21);
    // printed row r, column j is R[r + j][j]
    for (row, cells) in TABLE_3.iter().enumerate() {
        for (col, want) in cells.iter().enumerate() {
            let got = r.cell(row + col, col).unwrap();
            assert!(
                (got - want).abs() <= 1e-11,
                "({row},{col}): {got} vs {want}"
            );
        }
    }
    assert!((r.final_value() + 2.00000000000133).abs() <= 1e-11);
}

#[test]
fn table4() {
    let t = build_alt_tableau(&sine32(), &[32, 2, 4, 8, 16]).unwrap();
    assert_eq!(t.cell_count(), 15);
    for (row, cells) in TABLE_4.iter().enumerate() {
        for (col, want) in cells.iter().enumerate() {
            let got = t.cell(row, col).unwrap().value;
            assert!(
                (got - want).abs() <= 1e-10,
                "({row},{col}): {got} vs {want}"
            );
        }
    }
}

#[test]
fn table4_shares_simpson_cells_with_romberg() {
    let g = sine32();
    let alt = build_alt_tableau(&g, &[32, 2, 4, 8, 16]).unwrap();
    let romberg = build_romberg_tableau(&g).unwrap();
    // A_2 on the full grid is composite Simpson, i.e. Romberg's first extrapolation
    let a2 = alt.cell(1, 0).unwrap().value;
    assert!((a2 - romberg.cell(5, 1).unwrap()).abs() < 1e-14);
    assert!((alt.final_estimate().value - romberg.final_value()).abs() < 1e-13);
}
