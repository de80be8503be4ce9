import pytest

from skyrmion_logic import (PhysicalConstants, default_config,
                            thiele_constants)


@pytest.fixture(scope="session")
def cfg():
    return default_config()


@pytest.fixture(scope="session")
def tc(cfg):
    """Constants at the packaged (calibrated) defaults."""
    return thiele_constants(cfg.material, cfg.geometry, cfg.drive,
                            cfg.constants)


@pytest.fixture(scope="session")
def electron_constants():
    """Free-electron gyromagnetic ratio, for formula-level checks."""
    return PhysicalConstants(gamma0=1.76e11)


@pytest.fixture(scope="session")
def tc_electron(cfg, electron_constants):
    return thiele_constants(cfg.material, cfg.geometry, cfg.drive,
                            electron_constants)
