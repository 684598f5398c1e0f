"""T-catégorie tressée YD(H)"""
