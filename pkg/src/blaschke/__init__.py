"""Singularly perturbed Blaschke product dynamics toolkit."""

__version__ = "0.1.0"
ENGINE = f"blaschke-dynamics/{__version__}"

