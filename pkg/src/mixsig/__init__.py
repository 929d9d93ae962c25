"""Simulation and error-aware training of low-precision CNNs on noisy analog convolution hardware."""

__version__ = "0.1.0"

from .core import RngStream, gaussian_sample, rmse

__all__ = ["RngStream", "gaussian_sample", "rmse", "__version__"]
