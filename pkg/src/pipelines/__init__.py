"""Suites de vérification"""
