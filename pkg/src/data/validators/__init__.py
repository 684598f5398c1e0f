"""Validation JSON Schema"""
