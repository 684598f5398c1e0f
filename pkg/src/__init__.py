"""Hopf YD Verifier"""
