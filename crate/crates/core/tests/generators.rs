use sssp_core::{parse_dimacs, write_dimacs, Family, GenSpec, Graph, Params};

fn small_params(f: Family) -> &'static str {
    match f {
        Family::Star | Family::BadGor => "k=20",
        Family::Grid => "x=5,y=4",
        Family::SGrid | Family::Sqnc => "x=6",
        Family::WGrid => "y=10",
        Family::LGrid => "x=10",
        Family::PhGrid | Family::NhGrid => "x=4,y=5",
        Family::Rand => "n=30,m=90,l=-5,u=50",
        Family::SRand | Family::PRand => "n=40",
        Family::DRand => "n=20",
        Family::Pd2sRand | Family::PsRand | Family::PcRand => "n=30,m=100",
        Family::FpAcyc | Family::FnAcyc => "n=25",
        Family::P2nAcyc => "n=64,m=256,f=0.3",
        Family::Rand05 => "n=50,l=-100",
    }
}

fn make(f: Family, seed: u64) -> Graph {
    let params: Params = small_params(f).parse().unwrap();
    GenSpec::new(f, params, seed)
        .generate()
        .unwrap_or_else(|e| panic!("{f}: {e}"))
}

#[test]
fn regeneration_is_byte_identical() {
    for f in Family::ALL {
        let a = write_dimacs(&make(f, 7));
        let b = write_dimacs(&make(f, 7));
        assert_eq!(a, b, "{f}");
    }
}

#[test]
fn seeds_matter_for_random_families() {
    for f in Family::ALL {
        if matches!(f, Family::Star | Family::BadGor) {
            continue;
        }
        assert_ne!(write_dimacs(&make(f, 1)), write_dimacs(&make(f, 2)), "{f}");
    }
}

#[test]
fn dimacs_round_trip_for_every_family() {
    for f in Family::ALL {
        let g = make(f, 3);
        let text = write_dimacs(&g);
        let h = parse_dimacs(&text).unwrap();
        assert_eq!((h.n(), h.source()), (g.n(), g.source()), "{f}");
        assert_eq!(h.arcs(), g.arcs(), "{f}");
        assert_eq!(write_dimacs(&h), text);
    }
}

#[test]
fn unknown_parameters_are_rejected() {
    let params: Params = "k=5,z=1".parse().unwrap();
    assert!(GenSpec::new(Family::Star, params, 0).generate().is_err());
    assert!("nope".parse::<Family>().is_err());
}
