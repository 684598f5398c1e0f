"""Paires en involution"""
