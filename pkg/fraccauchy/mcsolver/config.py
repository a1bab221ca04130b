"""Monte-Carlo run settings."""

from typing import Optional

from pydantic import BaseModel, Field

from fraccauchy.core.config import get_settings
from fraccauchy.core.errors import ConfigError
from fraccauchy.spectral import BoxDomain, eigenvalue


class McConfig(BaseModel):
    """Path count, step sizes, seed and step budget of one Monte-Carlo run."""

    n_paths: int = Field(100_000, ge=100, description="Number of simulated paths")
    dt: float = Field(1e-4, gt=0.0, description="Brownian time step")
    dx: float = Field(1e-3, gt=0.0, description="Grid step of the composite-subordinator walk")
    seed: int = Field(0, ge=0, lt=2 ** 64, description="64-bit master seed")
    budget: int = Field(1_000_000, ge=1, description="Maximum steps per path")
    block_size: Optional[int] = Field(None, ge=1, description="Paths per random stream (default from settings)")
    threads: Optional[int] = Field(None, ge=1, description="Worker threads (default from settings)")

    model_config = {"frozen": True}

    @property
    def effective_block_size(self) -> int:
        return self.block_size or get_settings().block_size

    @property
    def effective_threads(self) -> int:
        return self.threads or get_settings().threads

    def check_for(self, dom: BoxDomain) -> "McConfig":
        """
        Enforce the step-size and resource limits for a box.

        Raises:
            ConfigError: if dt > 1e-2 / mu_1 or n_paths * budget exceeds the resource cap
        """
        mu_1 = eigenvalue(dom, (1,) * dom.d)
        if self.dt > 1e-2 / mu_1:
            raise ConfigError(f"dt={self.dt:g} exceeds 1e-2 / mu_1 = {1e-2 / mu_1:.4g} for box {dom.lengths}")
        cap = get_settings().resource_cap
        if self.n_paths * self.budget > cap:
            raise ConfigError(f"n_paths * budget = {self.n_paths * self.budget:.3g} exceeds resource cap {cap:.3g}")
        return self
