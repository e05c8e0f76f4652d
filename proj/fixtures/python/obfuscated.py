from __future__ import IMPORT_0, IMPORT_1, IMPORT_2
import sys, os.IMPORT_3

VAR_0 = "VisitorBase parse check".FUNC_0()

VAR_1 = os.IMPORT_3.FUNC_1(os.IMPORT_3.FUNC_2(VAR_2))
VAR_3 = None
common_path = os.IMPORT_3.FUNC_1(VAR_1, 'common')

def _get_asdl_depending_on_version():

    global VAR_3
    VAR_4, VAR_5 = sys.VAR_6[0], sys.VAR_6[1]
    VAR_7 = VAR_8.FUNC_3('.', 1)
    base = (VAR_7[0] + '.') if FUNC_4(VAR_7) > 1 else ''
    VAR_9 = 'py' + str(VAR_4) + str(VAR_5)
    VAR_3 = os.IMPORT_3.FUNC_1(VAR_1, VAR_9)

    VAR_10 = 0

    VAR_11 = base + VAR_9 + '.asdl'
    try:
        VAR_12 = FUNC_5(VAR_11, VAR_13=VAR_0, VAR_14=VAR_10)
    except VAR_15:
        VAR_9 = 'common'
        VAR_11 = base + VAR_9 + '.asdl'
        VAR_12 = FUNC_5(VAR_11, VAR_13=VAR_0)
    for VAR_16 in VAR_0:
        FUNC_6()[VAR_16] = FUNC_7(VAR_12, VAR_16)
