"""Chargement, validation et sérialisation des documents d'entrée"""
