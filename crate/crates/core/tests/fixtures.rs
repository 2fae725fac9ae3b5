// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use serde_json::Value;

use bisoft::fixture::{Fixture, FixtureDocument};
use bisoft::rough::rough_regions;
use bisoft::search::{self, Candidate, Corpus, Expect, Outcome};
use bisoft::separation::{self, Axiom, Orientation, Which};
use bisoft::softset::SoftSet;

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn load(stem: &str) -> Fixture {
    Fixture::load(dir().join(format!("{stem}.json"))).unwrap()
}

fn manifest() -> serde_json::Map<String, Value> {
    let text = std::fs::read_to_string(dir().join("manifest.json")).unwrap();
    serde_json::from_str(&text).unwrap()
}

fn names(s: &SoftSet) -> Value {
    serde_json::to_value(s).unwrap()
}

#[test]
fn every_fixture_is_listed_and_round_trips() {
    let m = manifest();
    let mut stems: Vec<String> = std::fs::read_dir(dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.file_name().unwrap() != "manifest.json")
        .map(|p| p.file_stem().unwrap().to_string_lossy().into_owned())
        .collect();
    stems.sort();
    let mut listed: Vec<String> = m.keys().cloned().collect();
    listed.sort();
    assert_eq!(stems, listed);
    for stem in stems {
        let text = std::fs::read_to_string(dir().join(format!("{stem}.json"))).unwrap();
        let doc = FixtureDocument::from_json(&text).unwrap();
        assert_eq!(FixtureDocument::from_json(&doc.to_json()).unwrap(), doc, "{stem}");
        let on_disk: Value = serde_json::from_str(&text).unwrap();
        let written: Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(on_disk, written, "{stem}");
    }
}

#[test]
fn topologies_match_manifest() {
    for (stem, expected) in manifest() {
        let fx = load(&stem);
        for (name, want) in expected["topologies"].as_object().unwrap() {
            let got = fx.topology(name);
            assert_eq!(got.is_ok(), want["valid"].as_bool().unwrap(), "{stem}/{name}");
            assert_eq!(got.unwrap().len() as u64, want["members"].as_u64().unwrap(), "{stem}/{name}");
        }
    }
}

#[test]
fn axioms_match_manifest() {
    for (stem, expected) in manifest() {
        let Some(spaces) = expected.get("spaces") else { continue };
        let fx = load(&stem);
        for (name, want) in spaces.as_object().unwrap() {
            let s = fx.space(name).unwrap();
            let sup = s.sup();
            let ctx = fx.context();
            let at = |key: &str| want[key].as_bool().unwrap();
            let which = |key: &str, w: &str| want[key][w].as_bool().unwrap();
            let tag = format!("{stem}/{name}");
            assert_eq!(sup.len() as u64, want["sup_members"].as_u64().unwrap(), "{tag}");
            for (key, f) in [
                ("soft_t0", separation::soft_t0 as fn(&_) -> bool),
                ("soft_t1", separation::soft_t1),
                ("soft_t2", separation::soft_t2),
            ] {
                assert_eq!(f(s.first()), which(key, "first"), "{tag} {key}");
                assert_eq!(f(s.second()), which(key, "second"), "{tag} {key}");
                assert_eq!(f(&sup), which(key, "supremum"), "{tag} {key}");
            }
            assert_eq!(separation::pairwise_soft_t0(&s), at("pairwise_t0"), "{tag}");
            assert_eq!(
                separation::pairwise_soft_t0_oriented(&s, Orientation::Strict),
                at("pairwise_t0_strict"),
                "{tag}"
            );
            assert_eq!(separation::pairwise_soft_t1(&s), at("pairwise_t1"), "{tag}");
            assert_eq!(separation::pairwise_soft_t2(&s), at("pairwise_t2"), "{tag}");
            assert_eq!(separation::strong_t0(&s), at("strong_t0"), "{tag}");
            assert_eq!(separation::strong_t1(&s), at("strong_t1"), "{tag}");
            assert_eq!(separation::hausdorff_char(&s), at("hausdorff_char"), "{tag}");
            for (param, sl) in want["slices"].as_object().unwrap() {
                let b = s.slice_named(param).unwrap();
                assert_eq!(b.pw_t0(), sl["pw_t0"].as_bool().unwrap(), "{tag} {param}");
                assert_eq!(b.pw_t1(), sl["pw_t1"].as_bool().unwrap(), "{tag} {param}");
                assert_eq!(b.pw_t2(), sl["pw_t2"].as_bool().unwrap(), "{tag} {param}");
                let opens = |t: &bisoft::topology::PointTopology| -> Value {
                    let mut v: Vec<Vec<&str>> = t
                        .opens()
                        .iter()
                        .map(|u| u.iter().map(|x| ctx.universe().name(x)).collect())
                        .collect();
                    v.sort_by_key(|o| (o.len(), o.clone()));
                    serde_json::to_value(v).unwrap()
                };
                assert_eq!(opens(b.p()), sl["first"], "{tag} {param}");
                assert_eq!(opens(b.q()), sl["second"], "{tag} {param}");
            }
            if let Some(r) = want.get("rough") {
                let got = rough_regions(&s, fx.target().unwrap()).unwrap();
                assert_eq!(names(&got.lower), r["lower"], "{tag}");
                assert_eq!(names(&got.upper), r["upper"], "{tag}");
                assert_eq!(names(&got.neg), r["neg"], "{tag}");
                assert_eq!(names(&got.bnd), r["bnd"], "{tag}");
                assert_eq!(got.definable, r["definable"].as_bool().unwrap(), "{tag}");
            }
        }
    }
}

#[test]
fn listed_suprema_are_computed_suprema() {
    for stem in ["sup", "t2a"] {
        let fx = load(stem);
        let listed = fx.topology("Sup").unwrap();
        assert_eq!(fx.space("S").unwrap().sup(), listed, "{stem}");
    }
    let fx = load("bisoft1");
    let sup = fx.space("S").unwrap().sup();
    let labels: Vec<String> = sup.members().iter().map(|m| fx.label(m)).collect();
    assert_eq!(labels, ["Phi", "G4", "G3", "G1", "F1", "F2", "G2", "H1", "X"]);
}

#[test]
fn fixture_spaces_respect_every_claim_expected_to_hold() {
    let spaces = manifest()
        .iter()
        .filter(|(_, v)| v.get("spaces").is_some())
        .map(|(stem, _)| load(stem).space("S").unwrap())
        .collect();
    let report = search::verify_implications(&Corpus::Spaces(spaces)).unwrap();
    for t in &report.tallies {
        assert_eq!(t.violations, 0, "{}", t.claim);
    }
}

#[test]
fn refuted_claims_fail_on_their_fixture() {
    for claim in search::registry().iter().filter(|c| c.fixture.is_some()) {
        assert_eq!(claim.expect, Expect::Refuted);
        let s = load(claim.fixture.unwrap()).space("S").unwrap();
        let outcome = claim.evaluate_candidate(&Candidate::new(s));
        assert!(matches!(outcome, Outcome::Violated(_)), "{}", claim.id);
    }
}

#[test]
fn t0a_report_pairs() {
    let s = load("t0a").space("S").unwrap();
    let report = separation::AxiomReport::build(&s, Default::default());
    let pair = |a| report.get(a).unwrap().failing_pair.clone();
    assert_eq!(pair(Axiom::SoftT0(Which::First)), Some(("h1".into(), "h2".into())));
    assert_eq!(pair(Axiom::SoftT0(Which::Second)), Some(("h1".into(), "h3".into())));
    assert_eq!(pair(Axiom::PairwiseT0(Orientation::Symmetric)), None);
    let e2 = s.slice_named("e2").unwrap();
    assert_eq!(e2.pw_t0_failure(), Some((0, 3)));
}

#[test]
fn subspaces_of_fixtures_resolve() {
    let fx = load("t1a");
    let doc = fx.subspace_document("S", &["h1", "h3"]).unwrap();
    let sub = doc.resolve().unwrap().space("S").unwrap();
    let y = fx.context().subset(["h1", "h3"]).unwrap();
    let direct = fx.space("S").unwrap().subspace(y).unwrap();
    assert_eq!(sub.first().members(), direct.first().members());
    assert_eq!(sub.second().members(), direct.second().members());
    assert!(separation::pairwise_soft_t1(&sub));
}
