from __future__ import print_function, division, absolute_import
import sys, os.path

_importlist = "VisitorBase parse check".split()

_cd = os.path.join(os.path.dirname(__file__))
version_specific_path = None
common_path = os.path.join(_cd, 'common')

def _get_asdl_depending_on_version():

    global version_specific_path
    major, minor = sys.version_info[0], sys.version_info[1]
    prefix = __name__.rsplit('.', 1)
    base = (prefix[0] + '.') if len(prefix) > 1 else ''
    dname = 'py' + str(major) + str(minor)
    version_specific_path = os.path.join(_cd, dname)

    use_abs_import = 0

    mname = base + dname + '.asdl'
    try:
        mod = __import__(mname, fromlist=_importlist, level=use_abs_import)
    except ImportError:
        dname = 'common'
        mname = base + dname + '.asdl'
        mod = __import__(mname, fromlist=_importlist)
    for i in _importlist:
        globals()[i] = getattr(mod, i)
