from sgl_cocycles.tests._conftest import *  # noqa
