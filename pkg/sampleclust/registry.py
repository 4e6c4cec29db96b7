"""Name-to-class registry; the sample solvers register themselves here."""

from __future__ import annotations

from typing import TYPE_CHECKING, Any, Callable, Generic, TypeVar

if TYPE_CHECKING:
    from sampleclust.sampler.base import Solver

T = TypeVar("T")
Factory = Callable[..., T]


class Registry(Generic[T]):
    """Maps names to factories; ``@registry.register("name")`` on a class adds it."""

    def __init__(self, kind: str) -> None:
        self.kind = kind
        self._entries: dict[str, Factory[T]] = {}

    def register(self, name: str) -> Callable[[Factory[T]], Factory[T]]:
        def add(factory: Factory[T]) -> Factory[T]:
            existing = self._entries.get(name)
            if existing is not None and existing is not factory:
                raise ValueError(f"{self.kind} '{name}' is already registered")
            self._entries[name] = factory
            return factory

        return add

    def get(self, name: str) -> Factory[T]:
        """Factory registered under ``name``.

        Raises:
            KeyError: Unknown name; the message lists the registered ones.
        """
        try:
            return self._entries[name]
        except KeyError:
            raise KeyError(f"Unknown {self.kind}: {name}. Available: {', '.join(self.list())}") from None

    def list(self) -> list[str]:
        return sorted(self._entries)

    def __contains__(self, name: object) -> bool:
        return name in self._entries


solvers: Registry[Solver] = Registry("solver")


def get_solver(name: str, **kwargs: Any) -> Solver:
    """Instantiate the solver registered under ``name``."""
    import sampleclust.sampler.solvers  # noqa: F401  (registers the built-in solvers)

    return solvers.get(name)(**kwargs)
