"""Digitopo - contractible graphs and homotopy-preserving thinning of digital spaces."""
