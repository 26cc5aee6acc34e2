"""Budgets and switches shared by the resolution engine and the CLI."""
import os
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class OrbitOptions:
    """Search budgets for syzygy orbits and isomorphism tests.

    Parameters
    ----------
    max_steps : int
        Largest syzygy exponent tried before an orbit is Inconclusive.
    dim_cap : int
        Dimension budget. Divergence is declared once `window` consecutive
        syzygy dimensions are strictly increasing and the last one exceeds
        ``dim_cap / 2``; an orbit whose syzygies grow beyond `dim_cap` is
        stopped.
    window : int
        Length of the strictly increasing run required for divergence.
    iso_samples : int
        Random samples tried by the isomorphism search over large fields.
    seed : int
        Seed of the isomorphism search generator.
    bimodule_max_dim : int
        Largest algebra dimension accepted by the bimodule orbit.
    exhaustive_limit : int
        Largest ``Hom`` space (number of elements) searched exhaustively over
        a prime field.
    check_actions : bool
        Verify the multiplicativity of every module built during a search.

    """
    max_steps: int = 200
    dim_cap: int = 20000
    window: int = 10
    iso_samples: int = 64
    seed: int = 0
    bimodule_max_dim: int = 12
    exhaustive_limit: int = 4096
    check_actions: bool = False

    def __post_init__(self):
        for name in ('max_steps', 'dim_cap', 'window', 'iso_samples',
                     'bimodule_max_dim', 'exhaustive_limit'):
            if getattr(self, name) < 1:
                raise ValueError(f'{name} must be positive, got '
                                 f'{getattr(self, name)}')

    @classmethod
    def from_env(cls, **overrides):
        """Options with `TRIVEXT_SEED` and `TRIVEXT_DEBUG` applied.

        Keyword arguments that are not None win over the environment.
        """
        values = {}
        seed = os.environ.get('TRIVEXT_SEED')
        if seed:
            try:
                values['seed'] = int(seed)
            except ValueError:
                raise ValueError(f'TRIVEXT_SEED must be an integer, got '
                                 f'{seed!r}') from None
        if os.environ.get('TRIVEXT_DEBUG', '').lower() in ('1', 'true', 'yes'):
            values['check_actions'] = True
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def replace(self, **changes):
        return replace(self, **changes)
