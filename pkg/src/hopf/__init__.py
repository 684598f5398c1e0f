"""Algèbres de Hopf"""
