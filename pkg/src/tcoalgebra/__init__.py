"""T-coalgèbre DT(H)"""
