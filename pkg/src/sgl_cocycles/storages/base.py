import re
from typing import Any, Optional

from ..constants import MAX_BASENAME_LENGTH
from ..reports import Report

__license__ = "MIT"
__all__ = ("BaseStorage",)

UNSAFE_CHARACTERS = re.compile(r"[^\w.,=+-]+")


class BaseStorage:
    """Base storage for report files.

    Subclasses provide the file operations; naming and saving of reports
    is shared.
    """

    def __init__(self, *args, **kwargs) -> None:
        self.args = args
        self.kwargs = kwargs

    def report_basename(self: "BaseStorage", report: Report) -> str:
        """Name derived from the command and its parameters.

        ``verify mumford`` with ``n=2, beta=3, range=6`` gives
        ``verify-mumford_n=2_beta=3_range=6``.
        """
        parts = [report.command.replace(" ", "-")]
        for key, value in report.params.items():
            if isinstance(value, (list, tuple)):
                value = "+".join(str(item) for item in value)
            parts.append(f"{key}={value}")
        basename = UNSAFE_CHARACTERS.sub("", "_".join(parts))
        return basename[:MAX_BASENAME_LENGTH]

    def generate_filename(
        self: "BaseStorage",
        extension: str,
        basename: Optional[str] = None,
    ) -> Any:
        raise NotImplementedError(
            "Method generate_filename is not implemented!"
        )

    def save_report(
        self: "BaseStorage",
        report: Report,
        fmt: str,
        include_timing: bool = False,
    ) -> Any:
        """Render ``report`` and write it under a fresh name.

        :return: The filename written.
        """
        filename = self.generate_filename(
            extension=fmt, basename=self.report_basename(report)
        )
        self.write_text(
            filename, report.render(fmt, include_timing=include_timing)
        )
        return filename

    def write_text(
        self: "BaseStorage",
        filename: Any,
        data: str,
        encoding: Optional[str] = None,
    ) -> int:
        raise NotImplementedError("Method write_text is not implemented!")

    def exists(self: "BaseStorage", filename: Any) -> bool:
        raise NotImplementedError("Method exists is not implemented!")

    def abspath(self: "BaseStorage", filename: Any) -> str:
        raise NotImplementedError("Method abspath is not implemented!")

    def unlink(self: "BaseStorage", filename: Any) -> None:
        raise NotImplementedError("Method unlink is not implemented!")
