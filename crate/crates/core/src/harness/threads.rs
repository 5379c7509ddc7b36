use rayon::{ThreadPool, ThreadPoolBuilder};

use crate::error::{Error, Result};

/// Environment variable consulted when no explicit thread count is given.
pub const THREADS_ENV: &str = "ED_NUM_THREADS";

/// Thread count: `explicit`, else `ED_NUM_THREADS`, else the available hardware parallelism.
pub fn resolve_threads(explicit: Option<usize>) -> Result<usize> {
    resolve_with(explicit, std::env::var(THREADS_ENV).ok().as_deref())
}

pub(crate) fn resolve_with(explicit: Option<usize>, env: Option<&str>) -> Result<usize> {
    if let Some(t) = explicit {
        return positive(t, "--threads");
    }
    if let Some(raw) = env {
        let t = raw
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::InvalidOption(format!("{THREADS_ENV}={raw:?} is not a positive integer")))?;
        return positive(t, THREADS_ENV);
    }
    Ok(std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn positive(t: usize, what: &str) -> Result<usize> {
    if t == 0 {
        Err(Error::InvalidOption(format!("{what} must be positive")))
    } else {
        Ok(t)
    }
}

pub fn thread_pool(threads: usize) -> Result<ThreadPool> {
    Ok(ThreadPoolBuilder::new().num_threads(threads).build()?)
}
