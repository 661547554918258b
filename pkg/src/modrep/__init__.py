"""modrep: exact computations with symmetric-group modules at desk scale."""

__version__ = "0.1.0"
