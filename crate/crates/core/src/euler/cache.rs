use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::QRatFn;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) enum SeqKey {
    QEuler,
    Frobenius(QRatFn),
    WeightedRecurrence(u32),
    WeightedClosedForm(u32),
}

type Store = Mutex<HashMap<SeqKey, Arc<Vec<QRatFn>>>>;

fn store() -> &'static Store {
    static STORE: OnceLock<Store> = OnceLock::new();
    STORE.get_or_init(Default::default)
}

/// Return at least `n_max + 1` entries of the sequence for `key`.
///
/// `extend` appends entries to a prefix until it reaches the requested
/// length. Fills are deterministic, so when two threads race the longer
/// result wins and both observe the same values.
pub(crate) fn memoized(
    key: SeqKey,
    n_max: usize,
    extend: impl FnOnce(&mut Vec<QRatFn>, usize),
) -> Arc<Vec<QRatFn>> {
    let existing = lock().get(&key).cloned();
    if let Some(seq) = &existing {
        if seq.len() > n_max {
            return Arc::clone(seq);
        }
    }
    let mut entries = existing.map(|s| s.as_ref().clone()).unwrap_or_default();
    extend(&mut entries, n_max + 1);
    let fresh = Arc::new(entries);
    let mut map = lock();
    let slot = map.entry(key).or_insert_with(|| Arc::clone(&fresh));
    if slot.len() < fresh.len() {
        *slot = Arc::clone(&fresh);
    }
    Arc::clone(slot)
}

pub(crate) fn insert(key: SeqKey, entries: Vec<QRatFn>) {
    let mut map = lock();
    let longer = map.get(&key).is_none_or(|s| s.len() < entries.len());
    if longer {
        map.insert(key, Arc::new(entries));
    }
}

pub(crate) fn get(key: &SeqKey) -> Option<Arc<Vec<QRatFn>>> {
    lock().get(key).cloned()
}

fn lock() -> std::sync::MutexGuard<'static, HashMap<SeqKey, Arc<Vec<QRatFn>>>> {
    store().lock().unwrap_or_else(|e| e.into_inner())
}
