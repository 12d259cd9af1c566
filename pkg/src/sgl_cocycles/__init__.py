__title__ = "sgl_cocycles"
__version__ = "0.1.0"
__author__ = "sgl-cocycles developers"
__copyright__ = "2024 sgl-cocycles developers"
__license__ = "MIT"
