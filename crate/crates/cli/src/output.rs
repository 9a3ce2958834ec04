use serde::Serialize;

use kappa_core::TreeNumber;

/// One computed tree-number. Field order is the serialization order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub group: String,
    pub order: usize,
    pub method: String,
    pub kappa: String,
    pub factorization: String,
    pub reduced: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl OutputRecord {
    pub fn new(group: &str, order: usize, method: &str, kappa: &TreeNumber, reduced: bool) -> Self {
        OutputRecord {
            group: group.to_string(),
            order,
            method: method.to_string(),
            kappa: kappa.value().to_string(),
            factorization: kappa.factored(),
            reduced,
            elapsed_ms: None,
        }
    }
}
