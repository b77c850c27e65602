use isbell_core::reproduce::{self, ReproduceOptions};

#[test]
fn every_claim_passes_and_is_sorted() {
    let claims = reproduce::run(&ReproduceOptions::default());
    let failed: Vec<_> = claims.iter().filter(|c| !c.pass).collect();
    assert!(failed.is_empty(), "{failed:#?}");
    let ids: Vec<_> = claims.iter().map(|c| c.claim_id.clone()).collect();
    assert_eq!(ids, reproduce::claim_ids());
}

#[test]
fn claims_serialize_without_runtime_by_default() {
    let opts = ReproduceOptions {
        filter: Some("young:n=7".into()),
        ..Default::default()
    };
    let claims = reproduce::run(&opts);
    assert_eq!(claims.len(), 3);
    let a = serde_json::to_string(&claims).unwrap();
    let b = serde_json::to_string(&reproduce::run(&opts)).unwrap();
    assert_eq!(a, b);
    assert!(!a.contains("runtime_ms"));
}
