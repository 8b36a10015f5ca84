"""srreg: regularity of powers, symbolic powers and intermediate ideals of Stanley-Reisner ideals."""

__version__ = "0.1.0"
