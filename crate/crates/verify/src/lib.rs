//! Acceptance harness; the run itself lives in `tests/acceptance.rs`.
