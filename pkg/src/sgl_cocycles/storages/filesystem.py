import logging
import os
import tempfile
from typing import Optional

from ..constants import DEFAULT_REL_PATH, DEFAULT_REPORT_ENCODING
from ..registry import REPORT_REGISTRY
from .base import BaseStorage

__license__ = "MIT"
__all__ = ("FileSystemStorage",)

LOGGER = logging.getLogger(__name__)


class FileSystemStorage(BaseStorage):
    """Writes reports to the local file system.

    Usage example:

    .. code-block:: python

        from sgl_cocycles.storages.filesystem import FileSystemStorage

        storage = FileSystemStorage()
        filename = storage.save_report(report, "json")

    Writing to a chosen directory:

    .. code-block:: python

        storage = FileSystemStorage(root_path="/tmp", rel_path="reports")
        storage.save_report(report, "md")  # /tmp/reports/<name>.md
    """

    def __init__(
        self: "FileSystemStorage",
        root_path: Optional[str] = tempfile.gettempdir(),
        rel_path: Optional[str] = DEFAULT_REL_PATH,
        *args,
        **kwargs,
    ) -> None:
        """
        :param root_path: Root directory of the reports.
        :param rel_path: Relative path (from root directory).
        """
        self.root_path = root_path or ""
        self.rel_path = rel_path or ""
        super().__init__(*args, **kwargs)

    def generate_filename(
        self: "FileSystemStorage",
        extension: str,
        basename: Optional[str] = None,
    ) -> str:
        """Path under the storage directory; taken names get a ``_<i>``
        suffix.
        """
        if not extension:
            raise ValueError("Extension shall be given!")
        dir_path = os.path.abspath(
            os.path.join(self.root_path, self.rel_path)
        )
        os.makedirs(dir_path, exist_ok=True)
        basename = basename or "report"
        filename = os.path.join(dir_path, f"{basename}.{extension}")
        counter = 1
        while self.exists(filename):
            counter += 1
            filename = os.path.join(
                dir_path, f"{basename}_{counter}.{extension}"
            )
        return filename

    def write_text(
        self: "FileSystemStorage",
        filename: str,
        data: str,
        encoding: Optional[str] = None,
    ) -> int:
        """Write text; the file is registered for later clean up."""
        path = self.abspath(filename)
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        try:
            with open(
                path,
                "w",
                encoding=encoding or DEFAULT_REPORT_ENCODING,
                newline="",
            ) as file:
                written = file.write(data)
        except OSError as err:
            LOGGER.error(f"Failed to write report {path}: {err}")
            raise
        REPORT_REGISTRY.add(self, path)
        LOGGER.debug(f"Wrote {written} characters to {path}")
        return written

    def exists(self: "FileSystemStorage", filename: str) -> bool:
        return os.path.exists(self.abspath(filename))

    def abspath(self: "FileSystemStorage", filename: str) -> str:
        if os.path.isabs(filename):
            return os.path.abspath(filename)
        return os.path.abspath(
            os.path.join(self.root_path, self.rel_path, filename)
        )

    def unlink(self: "FileSystemStorage", filename: str) -> None:
        os.remove(self.abspath(filename))
