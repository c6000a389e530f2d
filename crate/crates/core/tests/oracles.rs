mod common;

use common::{brute_force_connecting, builtin_json, loday_dims, oracle_prime, BIG_PRIME};
use lodaykit::catalog::builtin_catalog;
use lodaykit::exactla::{unit_vector, FieldSpec};
use lodaykit::homology::{leibniz_homology, HomologyConfig};
use lodaykit::theorems::six_term_maps;

#[test]
fn loday_dimensions_match_rank_oracle() {
    let cfg = HomologyConfig::default();
    let catalog = builtin_catalog(None).unwrap();
    for json in builtin_json() {
        let name = json["name"].as_str().unwrap();
        let entry = catalog.iter().find(|e| e.name == name).unwrap();
        let dims = loday_dims(&json, oracle_prime(&json), 3);
        assert_eq!(dims[0], 1);
        for (n, &want) in dims.iter().enumerate().skip(1) {
            let got = leibniz_homology(&entry.algebra, n, &cfg).unwrap().dim();
            assert_eq!(got, want, "{name}: HL{n}");
        }
        for (key, want) in &entry.expected {
            if want.source != "rank oracle" || !key.starts_with("HL") {
                continue;
            }
            let n: usize = key[2..].parse().unwrap();
            assert_eq!(want.dim, dims[n], "{name}: expected {key}");
        }
        if let Some(want) = entry.expected.get("ker_theta") {
            assert_eq!(want.dim, dims[2], "{name}: ker θ against the oracle HL2");
        }
    }
}

#[test]
fn oracle_on_hand_examples() {
    let ab = serde_json::json!({"name": "k2", "field": "Q", "dim": 2, "brackets": []});
    assert_eq!(loday_dims(&ab, BIG_PRIME, 3), vec![1, 2, 4, 8]);
    // [e1, e1] = e2: d_2 has rank 1, so HL1 = 1
    let cyc = serde_json::json!({"name": "c", "field": "Q", "dim": 2,
        "brackets": [{"i": 1, "j": 1, "coeffs": [[2, "1"]]}]});
    assert_eq!(loday_dims(&cyc, BIG_PRIME, 1), vec![1, 1]);
}

#[test]
fn h3_homology_depends_on_characteristic() {
    let json = builtin_json()
        .into_iter()
        .find(|j| j["name"] == "h3-q")
        .unwrap();
    let over_q = loday_dims(&json, BIG_PRIME, 3);
    let over_f2 = loday_dims(&json, 2, 3);
    assert_eq!(over_q[..3], over_f2[..3]);
    assert_eq!((over_q[3], over_f2[3]), (10, 12));
}

#[test]
fn connecting_map_matches_exhaustive_search() {
    let f2 = FieldSpec::Prime(2);
    let mut seen = 0;
    let mut nonzero = 0;
    for entry in builtin_catalog(None).unwrap() {
        if entry.field() != f2 {
            continue;
        }
        for x in &entry.extensions {
            let ext = &x.extension;
            if ext.total.dim() > 4 {
                continue;
            }
            let six = six_term_maps(ext).unwrap();
            let expected = brute_force_connecting(ext, &six);
            let f3 = &six.maps[2];
            nonzero += usize::from(!f3.is_zero());
            for (i, want) in expected.iter().enumerate() {
                let got = f3.apply(&unit_vector(f2, f3.domain_dim(), i));
                assert_eq!(&got, want, "{} / {}", entry.name, x.ideal);
            }
            seen += 1;
        }
    }
    assert!(seen >= 3);
    // cyclic2 over its commutator has a nonzero connecting map
    assert!(nonzero >= 1);
}

#[test]
fn connecting_map_over_f2_after_field_change() {
    // rational entries reread over F2 give more ladders to compare
    let f2 = FieldSpec::Prime(2);
    for entry in builtin_catalog(Some(f2)).unwrap() {
        for x in &entry.extensions {
            if x.extension.total.dim() > 4 {
                continue;
            }
            let six = six_term_maps(&x.extension).unwrap();
            let expected = brute_force_connecting(&x.extension, &six);
            let f3 = &six.maps[2];
            for (i, want) in expected.iter().enumerate() {
                assert_eq!(
                    &f3.apply(&unit_vector(f2, f3.domain_dim(), i)),
                    want,
                    "{}",
                    entry.name
                );
            }
        }
    }
}
