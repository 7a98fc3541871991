use wradius_harness::{EnsembleKind, EnsembleSpec, MatrixFile};

#[test]
fn identical_specs_produce_identical_files() {
    for kind in EnsembleKind::ALL {
        let a = EnsembleSpec::new(11, 5, 3, 2, kind).unwrap();
        let b = EnsembleSpec::new(11, 5, 3, 2, kind).unwrap();
        let x: Vec<String> = a
            .instances()
            .map(|m| MatrixFile::Block(m).to_canonical_string())
            .collect();
        let y: Vec<String> = b
            .instances()
            .map(|m| MatrixFile::Block(m).to_canonical_string())
            .collect();
        assert_eq!(x, y, "{kind}");
    }
}

#[test]
fn instance_order_does_not_matter() {
    let spec = EnsembleSpec::new(4, 4, 2, 2, EnsembleKind::Gaussian).unwrap();
    let forward: Vec<_> = (0..4).map(|k| spec.instance(k)).collect();
    let mut backward: Vec<_> = (0..4).rev().map(|k| spec.instance(k)).collect();
    backward.reverse();
    assert_eq!(forward, backward);
}

#[test]
fn ensembles_round_trip_through_files() {
    for kind in EnsembleKind::ALL {
        let spec = EnsembleSpec::new(2, 3, 2, 3, kind).unwrap();
        for m in spec.instances() {
            let text = MatrixFile::Block(m.clone()).to_canonical_string();
            let parsed = MatrixFile::parse(&text).unwrap();
            assert_eq!(parsed, MatrixFile::Block(m));
            assert_eq!(parsed.to_canonical_string(), text);
        }
    }
}
