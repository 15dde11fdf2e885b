use std::num::NonZeroUsize;
use std::thread;

/// Worker budget for the enumerators. Results never depend on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Workers(NonZeroUsize);

impl Workers {
    pub fn new(n: usize) -> Self {
        Workers(NonZeroUsize::new(n.max(1)).unwrap())
    }

    pub fn sequential() -> Self {
        Self::new(1)
    }

    pub fn get(self) -> usize {
        self.0.get()
    }

    /// Order-preserving parallel map over contiguous chunks.
    pub(crate) fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync,
    {
        let n = self.get().min(items.len());
        if n <= 1 {
            return items.iter().map(f).collect();
        }
        let chunk = items.len().div_ceil(n);
        let f = &f;
        thread::scope(|scope| {
            let handles: Vec<_> = items
                .chunks(chunk)
                .map(|c| scope.spawn(move || c.iter().map(f).collect::<Vec<U>>()))
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("worker panicked"))
                .collect()
        })
    }
}

impl Default for Workers {
    fn default() -> Self {
        Self::sequential()
    }
}
