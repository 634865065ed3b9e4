from __future__ import annotations

import pytest

from sra3 import kernels


@pytest.fixture(autouse=True)
def restore_kernel_backend():
    """Keep backend switches from leaking between tests."""
    before = kernels.active_backend()
    yield
    kernels.use_backend(before)
