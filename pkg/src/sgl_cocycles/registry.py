import logging
from threading import Lock
from typing import Dict, Set, Tuple

from .base import KindMismatchError
from .helpers import load_class_from_path

__license__ = "MIT"
__all__ = (
    "COCYCLE_REGISTRY",
    "REPORT_REGISTRY",
    "CocycleRegistry",
    "ReportRegistry",
)


LOGGER = logging.getLogger(__name__)


class CocycleRegistry:
    """Maps cocycle kind tags to dotted class paths.

    Classes are imported lazily, the first time a tag is requested.

    .. code-block:: python

        from sgl_cocycles.registry import COCYCLE_REGISTRY

        cocycle_cls = COCYCLE_REGISTRY.get("closed")
    """

    def __init__(self) -> None:
        self._paths: Dict[str, str] = {}
        self._classes: Dict[str, type] = {}
        self._lock = Lock()

    def register(self, tag: str, class_path: str) -> None:
        with self._lock:
            self._paths[tag] = class_path
            self._classes.pop(tag, None)

    def unregister(self, tag: str) -> bool:
        with self._lock:
            self._classes.pop(tag, None)
            return self._paths.pop(tag, None) is not None

    def tags(self) -> Tuple[str, ...]:
        with self._lock:
            return tuple(self._paths)

    def get(self, tag: str) -> type:
        with self._lock:
            if tag in self._classes:
                return self._classes[tag]
            if tag not in self._paths:
                raise KindMismatchError(f"Unknown cocycle kind: {tag!r}")
            loaded = load_class_from_path(self._paths[tag])
            self._classes[tag] = loaded
            LOGGER.debug(f"Loaded cocycle class {loaded.__name__} for {tag}")
            return loaded


class ReportRegistry:
    """Keeps track of report files written through a storage.

    Tests use :meth:`clean_up` to remove everything they wrote.
    """

    def __init__(self) -> None:
        self._registry: Set[Tuple[object, str]] = set()
        self._lock = Lock()

    def add(self, storage: object, filename: str) -> None:
        with self._lock:
            self._registry.add((storage, filename))

    def filenames(self) -> Tuple[str, ...]:
        with self._lock:
            return tuple(sorted(name for _, name in self._registry))

    def clean_up(self) -> None:
        with self._lock:
            while self._registry:
                storage, filename = self._registry.pop()
                try:
                    storage.unlink(filename)  # type: ignore[attr-defined]
                except Exception as err:
                    LOGGER.error(f"Failed to unlink file {filename}: {err}")


COCYCLE_REGISTRY = CocycleRegistry()
for _tag, _path in (
    ("closed", "sgl_cocycles.cocycles.closed.ClosedCocycle"),
    ("vir_n", "sgl_cocycles.cocycles.closed.VirNCocycle"),
    ("vir", "sgl_cocycles.cocycles.closed.VirCocycle"),
    ("trace", "sgl_cocycles.cocycles.trace.TraceCocycle"),
    ("psi", "sgl_cocycles.cocycles.psi.PsiCocycle"),
    ("alpha1", "sgl_cocycles.cocycles.ackp.AckpCocycle"),
    ("alpha2", "sgl_cocycles.cocycles.ackp.AckpCocycle"),
    ("alpha3", "sgl_cocycles.cocycles.ackp.AckpCocycle"),
    ("kac_moody", "sgl_cocycles.cocycles.kac_moody.KacMoodyCocycle"),
):
    COCYCLE_REGISTRY.register(_tag, _path)

REPORT_REGISTRY = ReportRegistry()
