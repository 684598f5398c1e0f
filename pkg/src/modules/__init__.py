"""Modules de Yetter-Drinfeld (alpha,beta)"""
