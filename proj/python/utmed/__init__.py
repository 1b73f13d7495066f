"""Switched trimmed-median impulse noise filter (C++ core)."""

from ._core import (  # noqa: F401
    CycleCosts,
    Decision,
    FilterParams,
    PgmError,
    TrimBounds,
    add_gaussian,
    add_mixed,
    add_random_impulse,
    add_salt_pepper,
    classify_and_correct,
    denoise_pa,
    fsmd_run_image,
    fsmd_run_window,
    ief,
    impulse_lut,
    mean_filter,
    measure_density,
    mse,
    pad_replicate,
    psnr,
    read_pgm,
    reference_sort,
    smf,
    snake_sort,
    sort3,
    trim_bounds,
    utmed,
    verify_network,
    write_pgm,
)

__all__ = [name for name in dir() if not name.startswith("_")]
