"""weightedcomplex package initialization."""
