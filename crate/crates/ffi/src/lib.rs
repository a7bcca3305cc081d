//! C ABI for the hopftree library (placeholder during bring-up).
