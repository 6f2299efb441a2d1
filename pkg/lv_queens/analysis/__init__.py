"""Pure sample-analysis modules: descriptive statistics and distribution fitting."""
