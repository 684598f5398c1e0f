"""Noyau : corps, tenseurs, algèbre linéaire exacte, rapports"""
